#include "pbrigid/symb.hpp"

#include <algorithm>
#include <stdexcept>

namespace pbrigid {

std::string GaussianRational::str() const
{
    if (im == 0)
        return rat_str(re);
    std::string imag = rat_str(im) + "*i";
    if (re == 0)
        return imag;
    return rat_str(re) + (im > 0 ? "+" : "") + imag;
}

Polynomial Polynomial::constant(std::size_t nvars, GaussianRational c)
{
    return monomial(Monomial(nvars, 0), std::move(c));
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars)
        throw std::out_of_range("variable index out of range");
    Monomial m(nvars, 0);
    m[index] = 1;
    return monomial(std::move(m), GaussianRational(1));
}

Polynomial Polynomial::monomial(Monomial m, GaussianRational c)
{
    Polynomial p(m.size());
    if (!c.is_zero())
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void Polynomial::add_term(const Monomial& m, const GaussianRational& c)
{
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

namespace {

void require_same_vars(std::size_t a, std::size_t b)
{
    if (a != b)
        throw std::invalid_argument("variable mismatch between polynomials");
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    require_same_vars(nvars_, other.nvars_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    require_same_vars(nvars_, other.nvars_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    require_same_vars(a.nvars_, b.nvars_);
    Polynomial out(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) {
                std::uint64_t e = static_cast<std::uint64_t>(ma[i]) + mb[i];
                if (e > UINT32_MAX)
                    throw std::overflow_error("monomial exponent overflow");
                m[i] = static_cast<std::uint32_t>(e);
            }
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial operator*(const Polynomial& a, const GaussianRational& c)
{
    Polynomial out(a.nvars_);
    if (c.is_zero())
        return out;
    for (const auto& [m, coeff] : a.terms_)
        out.add_term(m, coeff * c);
    return out;
}

Polynomial Polynomial::partial(std::size_t var) const
{
    if (var >= nvars_)
        throw std::out_of_range("variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0)
            continue;
        Monomial d = m;
        d[var] -= 1;
        out.add_term(d, c * GaussianRational(Rat(m[var])));
    }
    return out;
}

Polynomial Polynomial::shifted(const Monomial& shift) const
{
    require_same_vars(nvars_, shift.size());
    Polynomial out(nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial s(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::uint64_t e = static_cast<std::uint64_t>(m[i]) + shift[i];
            if (e > UINT32_MAX)
                throw std::overflow_error("monomial exponent overflow");
            s[i] = static_cast<std::uint32_t>(e);
        }
        out.add_term(s, c);
    }
    return out;
}

std::optional<Int> Polynomial::homogeneous_degree(const std::vector<Int>& var_weights) const
{
    require_same_vars(nvars_, var_weights.size());
    if (terms_.empty())
        throw std::logic_error("degree of the zero polynomial is undefined");
    std::optional<Int> degree;
    for (const auto& [m, c] : terms_) {
        Int d = 0;
        for (std::size_t i = 0; i < nvars_; ++i)
            d += Int(m[i]) * var_weights[i];
        if (!degree)
            degree = d;
        else if (*degree != d)
            return std::nullopt;
    }
    return degree;
}

std::uint32_t checked_exponent(const Int& value)
{
    if (value < 0 || value > Int(UINT32_MAX))
        throw std::overflow_error("exponent does not fit the monomial representation: " + value.str());
    return value.convert_to<std::uint32_t>();
}

PresentedRing make_presented_ring(std::vector<std::string> variables, std::vector<Int> weights,
                                  Polynomial relation,
                                  std::vector<std::pair<std::string, std::string>> metadata)
{
    if (variables.size() != weights.size())
        throw std::invalid_argument("one weight per variable required");
    if (relation.nvars() != variables.size())
        throw std::invalid_argument("variable mismatch between relation and ring");
    if (relation.is_zero())
        throw std::invalid_argument("malformed relation: zero");
    if (!relation.homogeneous_degree(weights))
        throw std::invalid_argument("malformed relation: not homogeneous for the given weights");

    // lex-largest monomial; the division below needs its coefficient to be 1
    const auto& lead = *relation.terms().rbegin();
    if (!(lead.second == GaussianRational(1)))
        throw std::invalid_argument("malformed relation: leading coefficient is not 1");

    PresentedRing ring;
    ring.variables = std::move(variables);
    ring.weights = std::move(weights);
    ring.leading = lead.first;
    ring.relation = std::move(relation);
    ring.metadata = std::move(metadata);
    return ring;
}

PresentedRing pham_brieskorn_ring(const ExponentTuple& s)
{
    const std::size_t n = s.size();
    WeightVector wv = weights(s);
    Polynomial relation(n);
    for (std::size_t i = 0; i < n; ++i) {
        Monomial m(n, 0);
        m[i] = checked_exponent(s[i]);
        relation += Polynomial::monomial(std::move(m), GaussianRational(1));
    }
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back("x" + std::to_string(i));
    return make_presented_ring(std::move(vars), wv.weights, std::move(relation));
}

namespace {

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i])
            return false;
    return true;
}

} // namespace

Polynomial reduce(const Polynomial& p, const PresentedRing& ring)
{
    require_same_vars(p.nvars(), ring.variables.size());
    Polynomial tail = ring.relation;
    tail -= Polynomial::monomial(ring.leading, GaussianRational(1));

    Polynomial work = p;
    for (;;) {
        // lex-largest reducible monomial; every replacement is lex-smaller,
        // so this terminates
        const Monomial* found = nullptr;
        GaussianRational coeff;
        for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
            if (divides(ring.leading, it->first)) {
                found = &it->first;
                coeff = it->second;
                break;
            }
        }
        if (!found)
            return work;
        Monomial quotient(*found);
        for (std::size_t i = 0; i < quotient.size(); ++i)
            quotient[i] -= ring.leading[i];
        work -= Polynomial::monomial(*found, coeff);
        work -= tail.shifted(quotient) * coeff;
    }
}

Polynomial apply(const Derivation& d, const Polynomial& p)
{
    if (d.images.empty())
        throw std::invalid_argument("derivation has no images");
    require_same_vars(d.images.size(), p.nvars());
    Polynomial out(p.nvars());
    for (std::size_t v = 0; v < d.images.size(); ++v) {
        require_same_vars(d.images[v].nvars(), p.nvars());
        Polynomial dv = p.partial(v);
        if (!dv.is_zero())
            out += dv * d.images[v];
    }
    return out;
}

bool is_well_defined(const Derivation& d, const PresentedRing& ring)
{
    if (d.images.size() != ring.variables.size())
        throw std::invalid_argument("variable mismatch between derivation and ring");
    return reduce(apply(d, ring.relation), ring).is_zero();
}

HomogeneityReport homogeneous_degree(const Derivation& d, const PresentedRing& ring,
                                     const std::vector<Int>* grading)
{
    const std::vector<Int>& w = grading ? *grading : ring.weights;
    if (d.images.size() != ring.variables.size() || w.size() != ring.variables.size())
        throw std::invalid_argument("variable mismatch between derivation and grading");

    HomogeneityReport report;
    std::optional<Int> common;
    bool any = false;
    for (std::size_t v = 0; v < d.images.size(); ++v) {
        if (d.images[v].is_zero())
            continue;
        any = true;
        std::optional<Int> deg = d.images[v].homogeneous_degree(w);
        if (!deg)
            return report;
        Int h = *deg - w[v];
        if (!common)
            common = h;
        else if (*common != h)
            return report;
    }
    if (!any) {
        report.zero = true;
        return report;
    }
    report.degree = common;
    return report;
}

NilpotencyCertificate check_locally_nilpotent(const Derivation& d, const PresentedRing& ring, unsigned bound)
{
    if (!is_well_defined(d, ring))
        throw std::invalid_argument("derivation is not well-defined on the quotient");
    unsigned max_steps = 0;
    for (std::size_t v = 0; v < ring.variables.size(); ++v) {
        Polynomial p = reduce(Polynomial::variable(ring.variables.size(), v), ring);
        bool vanished = p.is_zero();
        unsigned steps = 0;
        while (!vanished && steps < bound) {
            p = reduce(apply(d, p), ring);
            ++steps;
            vanished = p.is_zero();
        }
        if (!vanished)
            return {false, bound};
        max_steps = std::max(max_steps, std::max(steps, 1u));
    }
    return {true, max_steps};
}

Witness witness_double_two(const ExponentTuple& s)
{
    std::vector<std::size_t> twos;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 2)
            twos.push_back(i);
    if (twos.size() < 2)
        throw std::invalid_argument("fewer than two exponents equal 2");
    const std::size_t i = twos[0], j = twos[1];

    std::vector<std::size_t> rest;
    for (std::size_t l = 0; l < s.size(); ++l)
        if (l != i && l != j)
            rest.push_back(l);
    if (rest.empty())
        throw std::invalid_argument("no variable besides the rewritten pair");

    Int big_l = lcm_tuple(s);
    const std::size_t nv = rest.size() + 2;
    std::vector<std::string> vars = {"u", "v"};
    std::vector<Int> var_weights = {big_l / 2, big_l / 2};
    Polynomial relation(nv);
    {
        Monomial uv(nv, 0);
        uv[0] = uv[1] = 1;
        relation += Polynomial::monomial(std::move(uv), GaussianRational(1));
    }
    for (std::size_t t = 0; t < rest.size(); ++t) {
        vars.push_back("x" + std::to_string(rest[t]));
        var_weights.push_back(big_l / s[rest[t]]);
        Monomial m(nv, 0);
        m[t + 2] = checked_exponent(s[rest[t]]);
        relation += Polynomial::monomial(std::move(m), GaussianRational(1));
    }

    std::vector<std::pair<std::string, std::string>> metadata = {
        {"u", "x" + std::to_string(i) + " + i*x" + std::to_string(j)},
        {"v", "x" + std::to_string(i) + " - i*x" + std::to_string(j)},
    };

    // slice variable: the remaining coordinate of smallest exponent
    std::size_t m_rest = 0;
    for (std::size_t t = 1; t < rest.size(); ++t)
        if (s[rest[t]] < s[rest[m_rest]])
            m_rest = t;
    const std::size_t m_pos = m_rest + 2;
    const Int& a_m = s[rest[m_rest]];
    Derivation d;
    d.images.assign(nv, Polynomial(nv));
    d.images[m_pos] = Polynomial::variable(nv, 0); // D(x_m) = u
    {
        Monomial pow(nv, 0);
        pow[m_pos] = checked_exponent(a_m - 1);
        d.images[1] = Polynomial::monomial(std::move(pow), GaussianRational(Rat(-a_m)));
    }

    return {"double-two", make_presented_ring(std::move(vars), std::move(var_weights),
                                              std::move(relation), std::move(metadata)),
            std::move(d)};
}

Witness witness_unit_exponent(const ExponentTuple& s)
{
    std::size_t i = s.size();
    for (std::size_t l = 0; l < s.size(); ++l)
        if (s[l] == 1) {
            i = l;
            break;
        }
    if (i == s.size())
        throw std::invalid_argument("no exponent equal to 1");
    // partner of smallest exponent keeps the iteration depth minimal
    std::size_t j = (i == 0) ? 1 : 0;
    for (std::size_t l = 0; l < s.size(); ++l)
        if (l != i && s[l] < s[j])
            j = l;

    PresentedRing ring = pham_brieskorn_ring(s);
    const std::size_t nv = ring.variables.size();
    Derivation d;
    d.images.assign(nv, Polynomial(nv));
    d.images[j] = Polynomial::constant(nv, GaussianRational(1));
    {
        Monomial pow(nv, 0);
        pow[j] = checked_exponent(s[j] - 1);
        d.images[i] = Polynomial::monomial(std::move(pow), GaussianRational(Rat(-s[j])));
    }
    return {"unit-exponent", std::move(ring), std::move(d)};
}

CurvePointQuery diagonal_curve_singularity(const Int& a, const Int& b, const GaussianRational& c)
{
    if (a < 2 || b < 2)
        throw std::invalid_argument("diagonal curve exponents must be >= 2");
    return c.is_zero() ? CurvePointQuery::SingularAtOrigin : CurvePointQuery::Smooth;
}

} // namespace pbrigid
