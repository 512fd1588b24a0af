#pragma once

#include "pbrigid/arith.hpp"
#include "pbrigid/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbrigid {

// Exact element of Q(i). The double-2 witness needs sqrt(-1) in the
// coefficient field, so the whole module works over Gaussian rationals.
struct GaussianRational {
    Rat re;
    Rat im;

    GaussianRational() = default;
    GaussianRational(Rat real) : re(std::move(real)) {}
    GaussianRational(long long real) : re(real) {}
    GaussianRational(Rat real, Rat imag) : re(std::move(real)), im(std::move(imag)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
    std::string str() const;
};

// Exponent vector over a fixed variable list; index 0 is the most significant
// position in the lex order used for division.
using Monomial = std::vector<std::uint32_t>;

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, GaussianRational c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(Monomial m, GaussianRational c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const GaussianRational& c);
    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    // formal partial derivative
    Polynomial partial(std::size_t var) const;

    // multiply by x^shift
    Polynomial shifted(const Monomial& shift) const;

    // weighted degree when every term agrees; nullopt otherwise. Undefined on
    // the zero polynomial (throws).
    std::optional<Int> homogeneous_degree(const std::vector<Int>& var_weights) const;

private:
    void add_term(const Monomial& m, const GaussianRational& c);

    std::size_t nvars_ = 0;
    std::map<Monomial, GaussianRational> terms_;
};

// Exponents are machine-width; witness construction converts tuple entries
// and refuses anything that does not fit.
std::uint32_t checked_exponent(const Int& value);

// B = k(i)[variables] / <relation>, graded by the given weights. The
// relation's lex-leading coefficient must be 1; a single generator is its own
// Groebner basis, so division by it computes a unique normal form.
struct PresentedRing {
    std::vector<std::string> variables;
    std::vector<Int> weights;
    Polynomial relation;
    Monomial leading;
    std::vector<std::pair<std::string, std::string>> metadata;
};

PresentedRing make_presented_ring(std::vector<std::string> variables, std::vector<Int> weights,
                                  Polynomial relation,
                                  std::vector<std::pair<std::string, std::string>> metadata = {});

PresentedRing pham_brieskorn_ring(const ExponentTuple& s);

// A derivation given by generator images; it extends by the Leibniz rule.
struct Derivation {
    std::vector<Polynomial> images;
};

// Normal form of p modulo the principal relation: linear, idempotent, and
// zero exactly on the ideal.
Polynomial reduce(const Polynomial& p, const PresentedRing& ring);

// Leibniz extension: apply(D, p) = sum_v dp/dv * D(v); no reduction.
Polynomial apply(const Derivation& d, const Polynomial& p);

// D descends to the quotient iff D(relation) lies in the ideal.
bool is_well_defined(const Derivation& d, const PresentedRing& ring);

struct HomogeneityReport {
    bool zero = false;          // the zero derivation (degree -infinity)
    std::optional<Int> degree;  // common degree when homogeneous
};

// Evaluates homogeneity against the supplied grading (defaults to the ring
// weights); no grading search is attempted.
HomogeneityReport homogeneous_degree(const Derivation& d, const PresentedRing& ring,
                                     const std::vector<Int>* grading = nullptr);

struct NilpotencyCertificate {
    bool certified = false;
    unsigned max_steps = 0; // largest number of applications needed on a generator
};

// Iterates apply-then-reduce on every generator. Vanishing on the generators
// certifies local nilpotency of a k-derivation of a finitely generated
// algebra in characteristic zero; that standard fact is assumed here.
NilpotencyCertificate check_locally_nilpotent(const Derivation& d, const PresentedRing& ring, unsigned bound);

struct Witness {
    std::string kind; // "unit-exponent" | "double-two"
    PresentedRing ring;
    Derivation derivation;
};

// For a_i = a_j = 2: the ring rewritten as uv + sum of the remaining powers
// (u = x_i + sqrt(-1) x_j, v = x_i - sqrt(-1) x_j, recorded as metadata) with
// the derivation u d/dx_m - a_m x_m^{a_m - 1} d/dv.
Witness witness_double_two(const ExponentTuple& s);

// For a_i = 1: D(x_j) = 1, D(x_i) = -a_j x_j^{a_j - 1} on the defining
// presentation.
Witness witness_unit_exponent(const ExponentTuple& s);

enum class CurvePointQuery { Smooth, SingularAtOrigin };

// The affine curve x^a + y^b + c = 0 (a, b >= 2) is singular iff c = 0, with
// the singular point at the origin.
CurvePointQuery diagonal_curve_singularity(const Int& a, const Int& b, const GaussianRational& c);

} // namespace pbrigid
