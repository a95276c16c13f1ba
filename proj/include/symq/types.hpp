#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symq {

/// A word X = (x_1, ..., x_N) over the 1-based alphabet [M].
struct InputWord {
    std::vector<int> entries;
    int m = 0;

    InputWord() = default;
    InputWord(std::vector<int> e, int alphabet) : entries(std::move(e)), m(alphabet) {
        if (m <= 0) throw std::invalid_argument("InputWord: M must be positive");
        if (entries.empty()) throw std::invalid_argument("InputWord: empty word");
        for (int v : entries)
            if (v < 1 || v > m) throw std::invalid_argument("InputWord: entry outside [M]");
    }

    int n() const { return static_cast<int>(entries.size()); }

    friend bool operator==(const InputWord& a, const InputWord& b) {
        return a.entries == b.entries;
    }
};

/// A type: the multiplicities of a word's symbols, sorted non-increasing.
/// Stored without trailing zeros; indexed access beyond the stored length
/// yields 0.
struct TypeProfile {
    std::vector<int> parts;

    TypeProfile() = default;
    explicit TypeProfile(std::vector<int> p) : parts(std::move(p)) {
        for (size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] <= 0) throw std::invalid_argument("TypeProfile: parts must be positive");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("TypeProfile: parts must be non-increasing");
        }
    }

    long long n() const {
        long long s = 0;
        for (int p : parts) s += p;
        return s;
    }

    int size() const { return static_cast<int>(parts.size()); }

    /// Row i (0-based); rows past the stored length are 0.
    int at(size_t i) const { return i < parts.size() ? parts[i] : 0; }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i) os << ',';
            os << parts[i];
        }
        os << ')';
        return os.str();
    }

    friend bool operator==(const TypeProfile& a, const TypeProfile& b) { return a.parts == b.parts; }
    friend bool operator!=(const TypeProfile& a, const TypeProfile& b) { return !(a == b); }
    friend bool operator<(const TypeProfile& a, const TypeProfile& b) { return a.parts < b.parts; }
};

/// Convenience builder: k copies of v, e.g. uniform_profile(8, 2) = (2^8... ).
inline TypeProfile uniform_profile(int copies, int v) {
    return TypeProfile(std::vector<int>(copies, v));
}

/// A list of exactly 2N non-negative integers summing to N, not necessarily
/// sorted. The working representation of the chopping procedure.
struct RowArray {
    std::vector<int> rows;
    long long n = 0;

    RowArray() = default;
    RowArray(std::vector<int> r, long long total) : rows(std::move(r)), n(total) {
        if (static_cast<long long>(rows.size()) != 2 * n)
            throw std::invalid_argument("RowArray: length must be exactly 2N");
        long long s = 0;
        for (int v : rows) {
            if (v < 0) throw std::invalid_argument("RowArray: negative row");
            s += v;
        }
        if (s != n) throw std::invalid_argument("RowArray: rows must sum to N");
    }

    static RowArray from_profile(const TypeProfile& a) {
        long long n = a.n();
        std::vector<int> r(a.parts);
        r.resize(2 * n, 0);
        return RowArray(std::move(r), n);
    }
};

/// The type of a word: multiplicities sorted descending.
inline TypeProfile type_of(const InputWord& x) {
    std::map<int, int> counts;
    for (int v : x.entries) ++counts[v];
    std::vector<int> parts;
    parts.reserve(counts.size());
    for (auto& [sym, c] : counts) parts.push_back(c);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return TypeProfile(std::move(parts));
}

/// kappa_j = |{i : x_i = j}| for j in [M]; entries sum to N.
inline std::vector<long long> multiplicity_counts(const InputWord& x) {
    std::vector<long long> counts(x.m, 0);
    for (int v : x.entries) ++counts[v - 1];
    return counts;
}

/// Converts a row-array to a type by sorting descending and dropping zeros.
inline TypeProfile sort_to_type(const RowArray& r) {
    std::vector<int> parts;
    parts.reserve(r.rows.size());
    for (int v : r.rows)
        if (v > 0) parts.push_back(v);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return TypeProfile(std::move(parts));
}

/// ||A - B|| = (1/2) sum_i |a_i - b_i|. An integer whenever A and B share N.
inline long long profile_distance(const TypeProfile& a, const TypeProfile& b) {
    if (a.n() != b.n()) throw std::invalid_argument("profile_distance: profiles disagree on N");
    size_t len = std::max(a.parts.size(), b.parts.size());
    long long twice = 0;
    for (size_t i = 0; i < len; ++i) twice += std::llabs(static_cast<long long>(a.at(i)) - b.at(i));
    return twice / 2;
}

/// A permutation-invariant partial function f : [M]^N -> {0,1,*}, stored as
/// the types it defines; absence means undefined.
struct SymmetricFunction {
    long long n = 0;
    int m = 0;
    std::vector<TypeProfile> ones;
    std::vector<TypeProfile> zeros;

    SymmetricFunction() = default;
    SymmetricFunction(long long n_, int m_, std::vector<TypeProfile> one_types,
                      std::vector<TypeProfile> zero_types)
        : n(n_), m(m_), ones(std::move(one_types)), zeros(std::move(zero_types)) {
        auto check = [&](const TypeProfile& t) {
            if (t.n() != n) throw std::invalid_argument("SymmetricFunction: type has wrong N");
            if (t.size() > m) throw std::invalid_argument("SymmetricFunction: type needs more than M symbols");
        };
        std::sort(ones.begin(), ones.end());
        ones.erase(std::unique(ones.begin(), ones.end()), ones.end());
        std::sort(zeros.begin(), zeros.end());
        zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
        for (auto& t : ones) check(t);
        for (auto& t : zeros) check(t);
        for (auto& t : ones)
            if (std::binary_search(zeros.begin(), zeros.end(), t))
                throw std::invalid_argument("SymmetricFunction: type assigned both 0 and 1");
    }

    /// f on a type: 0, 1, or nullopt (= *).
    std::optional<int> value_of_type(const TypeProfile& t) const {
        if (std::binary_search(ones.begin(), ones.end(), t)) return 1;
        if (std::binary_search(zeros.begin(), zeros.end(), t)) return 0;
        return std::nullopt;
    }

    std::optional<int> value(const InputWord& x) const { return value_of_type(type_of(x)); }
};

/// The collision promise problem: 1 on one-to-one inputs, 0 on two-to-one.
inline SymmetricFunction collision_function(int n, int m) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("collision_function: N must be even");
    if (m < n) throw std::invalid_argument("collision_function: M must be at least N");
    return SymmetricFunction(n, m, {uniform_profile(n, 1)}, {uniform_profile(n / 2, 2)});
}

/// All-equal versus balanced on a binary alphabet: 1-type (N), 0-type (N/2, N/2).
inline SymmetricFunction balanced_function(int n) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("balanced_function: N must be even");
    return SymmetricFunction(n, 2, {TypeProfile({n})}, {TypeProfile({n / 2, n / 2})});
}

/// Witness for a symmetry violation: two words of equal type with different values.
struct SymmetryViolation : std::runtime_error {
    InputWord first, second;
    SymmetryViolation(InputWord a, InputWord b)
        : std::runtime_error("map is not constant on type " + type_of(a).str()),
          first(std::move(a)), second(std::move(b)) {}
};

/// Induces a SymmetricFunction from an explicit word map (absent entries are
/// undefined). Succeeds iff the map is constant on every type; since a type
/// identifies the orbit under permuting positions and relabeling symbols,
/// constancy on types is the full permutation-invariance check.
inline SymmetricFunction validate_symmetry(const std::vector<std::pair<InputWord, int>>& word_map,
                                           long long n, int m) {
    std::map<TypeProfile, std::pair<int, InputWord>> seen;
    for (const auto& [word, value] : word_map) {
        if (word.n() != n || word.m != m)
            throw std::invalid_argument("validate_symmetry: word shape mismatch");
        if (value != 0 && value != 1)
            throw std::invalid_argument("validate_symmetry: values must be 0 or 1");
        TypeProfile t = type_of(word);
        auto it = seen.find(t);
        if (it == seen.end()) {
            seen.emplace(t, std::make_pair(value, word));
        } else if (it->second.first != value) {
            throw SymmetryViolation(it->second.second, word);
        }
    }
    std::vector<TypeProfile> ones, zeros;
    for (auto& [t, v] : seen) (v.first ? ones : zeros).push_back(t);
    return SymmetricFunction(n, m, std::move(ones), std::move(zeros));
}

}  // namespace symq
