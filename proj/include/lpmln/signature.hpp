#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpmln/errors.hpp"

namespace lpmln {

using Bits = std::uint64_t;

// Ordered set of atom names. Interpretations are bitsets over this ordering,
// with atom i at bit i.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<std::string> names) {
        for (auto& n : names) add(std::move(n));
    }

    void add(std::string name) {
        if (index_.count(name)) return;
        index_.emplace(name, static_cast<int>(names_.size()));
        names_.push_back(std::move(name));
    }

    int size() const { return static_cast<int>(names_.size()); }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnknownAtomError(name);
        return it->second;
    }

    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.names_ == b.names_;
    }

    static Signature unite(const Signature& a, const Signature& b) {
        Signature u = a;
        for (const auto& n : b.names_) u.add(n);
        return u;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

struct Interpretation {
    Bits bits = 0;

    bool has(int i) const { return (bits >> i) & 1u; }
    int count() const { return __builtin_popcountll(bits); }
    bool subset_of(Interpretation o) const { return (bits & ~o.bits) == 0; }
    bool proper_subset_of(Interpretation o) const {
        return subset_of(o) && bits != o.bits;
    }

    friend bool operator==(Interpretation a, Interpretation b) { return a.bits == b.bits; }
    friend bool operator!=(Interpretation a, Interpretation b) { return a.bits != b.bits; }
    friend bool operator<(Interpretation a, Interpretation b) { return a.bits < b.bits; }
};

// Two-world interpretation <Y, X> with Y ("here") a subset of X ("there").
struct HTInterpretation {
    Interpretation here;
    Interpretation there;

    bool total() const { return here == there; }

    friend bool operator==(HTInterpretation a, HTInterpretation b) {
        return a.here == b.here && a.there == b.there;
    }
};

inline std::string to_string(Interpretation x, const Signature& sig) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < sig.size(); ++i) {
        if (!x.has(i)) continue;
        if (!first) out += ", ";
        out += sig.name(i);
        first = false;
    }
    out += "}";
    return out;
}

inline std::string to_string(HTInterpretation i, const Signature& sig) {
    return "<" + to_string(i.here, sig) + ", " + to_string(i.there, sig) + ">";
}

}  // namespace lpmln
