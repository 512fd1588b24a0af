#pragma once

#include "pbrigid/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace pbrigid {

// An exponent tuple S = (a_0, ..., a_n), n >= 2, all entries >= 1.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<Int> exponents);
    ExponentTuple(std::initializer_list<long long> exponents);

    std::size_t size() const { return e_.size(); } // n + 1
    std::size_t dim() const { return e_.size() - 1; } // n
    const Int& operator[](std::size_t i) const;
    const std::vector<Int>& entries() const { return e_; }

    // Canonical representative of the permutation class: non-decreasing sort.
    ExponentTuple canonical() const;

    std::string str() const; // "(2,3,5,30)"

    friend bool operator==(const ExponentTuple& a, const ExponentTuple& b) { return a.e_ == b.e_; }
    friend bool operator<(const ExponentTuple& a, const ExponentTuple& b) { return a.e_ < b.e_; }

private:
    std::vector<Int> e_;
};

struct WeightVector {
    std::vector<Int> weights; // w_i = L / a_i
    Int total_degree;         // L
};

enum class GammaClass { NotInGamma, GammaOnly, GammaPlus, GammaMinus };

std::string to_string(GammaClass c);
std::optional<GammaClass> gamma_class_from_string(const std::string& name);

Int gcd_tuple(const ExponentTuple& s);
Int lcm_tuple(const ExponentTuple& s);

// S with entry i removed; the result must still be a valid tuple (length >= 3).
ExponentTuple drop(const ExponentTuple& s, std::size_t i);

// Indices i with a_i not dividing lcm(S_i); cotype(S) is their count.
std::vector<std::size_t> nondividing_indices(const ExponentTuple& s);
std::size_t cotype(const ExponentTuple& s);

ExponentTuple normalize(const ExponentTuple& s);

WeightVector weights(const ExponentTuple& s);

// alpha = L - sum_i L/a_i.
Int amplitude(const ExponentTuple& s);

// g_i(S) = gcd(a_i, lcm(S_i)).
Int g_i(const ExponentTuple& s, std::size_t i);

// S <=^i S'  iff  S_i = S'_i and g_i(S') | a_i | a_i'.
bool leq_order(const ExponentTuple& s, const ExponentTuple& t, std::size_t i);

GammaClass gamma_class(const ExponentTuple& s);

// Complete enumeration of the Gamma_n^- permutation classes, canonical sorted
// representatives. Only n = 3 is exact without a bound; for n >= 4 (or n = 3
// with an explicit bound) the search is restricted to entries <= max_entry and
// completeness is not guaranteed.
std::vector<ExponentTuple> enumerate_gamma_minus(unsigned n, std::optional<Int> max_entry = std::nullopt);

// Gamma_n^+ representatives with entries <= max_entry (the class is infinite,
// so a bound is mandatory).
std::vector<ExponentTuple> enumerate_gamma_plus(unsigned n, const Int& max_entry);

} // namespace pbrigid
