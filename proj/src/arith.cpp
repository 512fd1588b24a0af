#include "pbrigid/arith.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pbrigid {

ExponentTuple::ExponentTuple(std::vector<Int> exponents) : e_(std::move(exponents))
{
    if (e_.size() < 3)
        throw std::invalid_argument("exponent tuple needs at least 3 entries");
    for (const Int& a : e_)
        if (a < 1)
            throw std::invalid_argument("exponent tuple entries must be positive");
}

ExponentTuple::ExponentTuple(std::initializer_list<long long> exponents)
    : ExponentTuple(std::vector<Int>(exponents.begin(), exponents.end()))
{
}

const Int& ExponentTuple::operator[](std::size_t i) const
{
    if (i >= e_.size())
        throw std::out_of_range("tuple index out of range");
    return e_[i];
}

ExponentTuple ExponentTuple::canonical() const
{
    std::vector<Int> sorted = e_;
    std::sort(sorted.begin(), sorted.end());
    return ExponentTuple(std::move(sorted));
}

std::string ExponentTuple::str() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i)
            out << ',';
        out << e_[i];
    }
    out << ')';
    return out.str();
}

std::string to_string(GammaClass c)
{
    switch (c) {
    case GammaClass::NotInGamma: return "not-in-gamma";
    case GammaClass::GammaOnly: return "gamma";
    case GammaClass::GammaPlus: return "gamma-plus";
    case GammaClass::GammaMinus: return "gamma-minus";
    }
    throw std::logic_error("unreachable");
}

std::optional<GammaClass> gamma_class_from_string(const std::string& name)
{
    if (name == "not-in-gamma")
        return GammaClass::NotInGamma;
    if (name == "gamma")
        return GammaClass::GammaOnly;
    if (name == "gamma-plus")
        return GammaClass::GammaPlus;
    if (name == "gamma-minus")
        return GammaClass::GammaMinus;
    return std::nullopt;
}

Int gcd_tuple(const ExponentTuple& s)
{
    Int g = 0;
    for (const Int& a : s.entries())
        g = int_gcd(g, a);
    return g;
}

Int lcm_tuple(const ExponentTuple& s)
{
    Int l = 1;
    for (const Int& a : s.entries())
        l = int_lcm(l, a);
    return l;
}

ExponentTuple drop(const ExponentTuple& s, std::size_t i)
{
    if (i >= s.size())
        throw std::out_of_range("drop: index out of range");
    if (s.size() < 4)
        throw std::invalid_argument("drop: result would have fewer than 3 entries");
    std::vector<Int> rest;
    rest.reserve(s.size() - 1);
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            rest.push_back(s[j]);
    return ExponentTuple(std::move(rest));
}

namespace {

// lcm of S with entry i omitted; valid for any tuple length.
Int lcm_without(const ExponentTuple& s, std::size_t i)
{
    Int l = 1;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            l = int_lcm(l, s[j]);
    return l;
}

} // namespace

std::vector<std::size_t> nondividing_indices(const ExponentTuple& s)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (lcm_without(s, i) % s[i] != 0)
            out.push_back(i);
    return out;
}

std::size_t cotype(const ExponentTuple& s)
{
    return nondividing_indices(s).size();
}

ExponentTuple normalize(const ExponentTuple& s)
{
    Int d = gcd_tuple(s);
    std::vector<Int> out;
    out.reserve(s.size());
    for (const Int& a : s.entries())
        out.push_back(a / d);
    return ExponentTuple(std::move(out));
}

WeightVector weights(const ExponentTuple& s)
{
    Int l = lcm_tuple(s);
    WeightVector wv;
    wv.total_degree = l;
    wv.weights.reserve(s.size());
    for (const Int& a : s.entries())
        wv.weights.push_back(l / a);
    return wv;
}

Int amplitude(const ExponentTuple& s)
{
    WeightVector wv = weights(s);
    Int alpha = wv.total_degree;
    for (const Int& w : wv.weights)
        alpha -= w;
    return alpha;
}

Int g_i(const ExponentTuple& s, std::size_t i)
{
    if (i >= s.size())
        throw std::out_of_range("g_i: index out of range");
    return int_gcd(s[i], lcm_without(s, i));
}

bool leq_order(const ExponentTuple& s, const ExponentTuple& t, std::size_t i)
{
    if (s.size() != t.size())
        throw std::invalid_argument("leq_order: tuple length mismatch");
    if (i >= s.size())
        throw std::out_of_range("leq_order: index out of range");
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i && s[j] != t[j])
            return false;
    return s[i] % g_i(t, i) == 0 && t[i] % s[i] == 0;
}

GammaClass gamma_class(const ExponentTuple& s)
{
    std::size_t twos = 0;
    for (const Int& a : s.entries()) {
        if (a < 2)
            return GammaClass::NotInGamma;
        if (a == 2)
            ++twos;
    }
    if (twos >= 2)
        return GammaClass::NotInGamma;
    if (cotype(s) != 0)
        return GammaClass::GammaOnly;
    return amplitude(s) >= 0 ? GammaClass::GammaPlus : GammaClass::GammaMinus;
}

namespace {

// Enumerates sorted tuples (a_0 <= ... <= a_n), entries in [2, max_entry],
// min >= 2 and at most one entry equal to 2, invoking the sink on each.
void walk_sorted_tuples(unsigned length, const Int& max_entry,
                        const std::function<void(const std::vector<Int>&)>& sink)
{
    std::vector<Int> current;
    std::function<void(const Int&, bool)> rec = [&](const Int& min_value, bool has_two) {
        if (current.size() == length) {
            sink(current);
            return;
        }
        for (Int a = min_value; a <= max_entry; ++a) {
            if (a == 2 && has_two)
                continue;
            current.push_back(a);
            rec(a, has_two || a == 2);
            current.pop_back();
        }
    };
    rec(Int(2), false);
}

std::vector<ExponentTuple> collect_sorted(std::set<std::vector<Int>>&& found)
{
    std::vector<ExponentTuple> out;
    out.reserve(found.size());
    for (auto& entries : found)
        out.emplace_back(std::vector<Int>(entries));
    return out;
}

// Complete search for Gamma_3^-. The class conditions themselves force the
// bounds, so no externally supplied box is needed:
//   alpha < 0  <=>  1/a_0 + ... + 1/a_3 > 1 (divide alpha by L), hence for a
//   sorted tuple the tail sum (4-j)/a_j must exceed 1 - sum_{l<j} 1/a_l, which
//   bounds a_0 <= 3, a_1 <= 5 and a_2 <= 11 once "at most one 2" is imposed;
//   cotype 0 requires a_3 | lcm(a_0,a_1,a_2), so the last entry runs over the
//   divisors of that lcm only.
std::vector<ExponentTuple> gamma_minus_3_complete()
{
    std::set<std::vector<Int>> found;
    for (Int a0 = 2; a0 <= 3; ++a0) {
        for (Int a1 = a0; Rat(3, a1) > 1 - Rat(1, a0); ++a1) {
            if (a1 == 2 && a0 == 2)
                continue;
            Rat head2 = 1 - Rat(1, a0) - Rat(1, a1);
            for (Int a2 = a1; Rat(2, a2) > head2; ++a2) {
                if (a2 == 2 && (a0 == 2 || a1 == 2))
                    continue;
                Int l = int_lcm(int_lcm(a0, a1), a2);
                for (Int a3 = a2; a3 <= l; ++a3) {
                    if (l % a3 != 0)
                        continue;
                    ExponentTuple s({a0, a1, a2, a3});
                    if (gamma_class(s) == GammaClass::GammaMinus)
                        found.insert(s.entries());
                }
            }
        }
    }
    return collect_sorted(std::move(found));
}

std::vector<ExponentTuple> gamma_in_box(unsigned n, GammaClass cls, const Int& max_entry)
{
    if (max_entry < 2)
        return {};
    std::set<std::vector<Int>> found;
    walk_sorted_tuples(n + 1, max_entry, [&](const std::vector<Int>& entries) {
        ExponentTuple s{std::vector<Int>(entries)};
        if (gamma_class(s) == cls)
            found.insert(entries);
    });
    return collect_sorted(std::move(found));
}

} // namespace

std::vector<ExponentTuple> enumerate_gamma_minus(unsigned n, std::optional<Int> max_entry)
{
    if (n < 3)
        throw std::invalid_argument("gamma-minus enumeration needs n >= 3");
    if (!max_entry) {
        if (n != 3)
            throw std::invalid_argument("gamma-minus enumeration for n >= 4 needs an explicit entry bound");
        return gamma_minus_3_complete();
    }
    return gamma_in_box(n, GammaClass::GammaMinus, *max_entry);
}

std::vector<ExponentTuple> enumerate_gamma_plus(unsigned n, const Int& max_entry)
{
    if (n < 3)
        throw std::invalid_argument("gamma-plus enumeration needs n >= 3");
    return gamma_in_box(n, GammaClass::GammaPlus, max_entry);
}

} // namespace pbrigid
