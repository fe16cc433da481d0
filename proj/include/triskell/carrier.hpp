#pragma once

#include <map>
#include <string>
#include <vector>

#include "triskell/errors.hpp"

namespace triskell {

// Finite set of point labels in canonical (lexicographic) order.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_[i]; }
    bool contains(const std::string& l) const { return index_.count(l) != 0; }
    std::size_t index_of(const std::string& l) const;

    bool operator==(const Carrier& o) const { return labels_ == o.labels_; }
    bool operator!=(const Carrier& o) const { return !(*this == o); }

    // Left/right injections use the reserved "L."/"R." prefixes.
    static Carrier disjoint_union(const Carrier& a, const Carrier& b);
    // Pairs serialize as "(x,y)".
    static Carrier product(const Carrier& a, const Carrier& b);

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
};

std::string left_label(const std::string& x);
std::string right_label(const std::string& x);
std::string pair_label(const std::string& x, const std::string& y);
// Inverse of pair_label; splits at the comma balancing the outer parens.
std::pair<std::string, std::string> split_pair_label(const std::string& l);

}  // namespace triskell
