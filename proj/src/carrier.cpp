#include "triskell/carrier.hpp"

#include <algorithm>

namespace triskell {

Carrier::Carrier(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw error("duplicate carrier label: " + labels_[i]);
        index_.emplace(labels_[i], i);
    }
}

std::size_t Carrier::index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw error("label not in carrier: " + l);
    return it->second;
}

Carrier Carrier::disjoint_union(const Carrier& a, const Carrier& b) {
    std::vector<std::string> ls;
    ls.reserve(a.size() + b.size());
    for (const auto& l : a.labels()) ls.push_back(left_label(l));
    for (const auto& l : b.labels()) ls.push_back(right_label(l));
    return Carrier(std::move(ls));
}

Carrier Carrier::product(const Carrier& a, const Carrier& b) {
    std::vector<std::string> ls;
    ls.reserve(a.size() * b.size());
    for (const auto& x : a.labels())
        for (const auto& y : b.labels()) ls.push_back(pair_label(x, y));
    return Carrier(std::move(ls));
}

std::string left_label(const std::string& x) { return "L." + x; }
std::string right_label(const std::string& x) { return "R." + x; }

std::string pair_label(const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
}

std::pair<std::string, std::string> split_pair_label(const std::string& l) {
    if (l.size() < 3 || l.front() != '(' || l.back() != ')')
        throw error("not a pair label: " + l);
    int depth = 0;
    for (std::size_t i = 1; i + 1 < l.size(); ++i) {
        char c = l[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == ',' && depth == 0)
            return {l.substr(1, i - 1), l.substr(i + 1, l.size() - i - 2)};
    }
    throw error("not a pair label: " + l);
}

}  // namespace triskell
