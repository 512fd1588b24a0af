#include "pbrigid/classify.hpp"

#include <map>
#include <stdexcept>

namespace pbrigid {

std::string to_string(Status s)
{
    switch (s) {
    case Status::Rigid: return "rigid";
    case Status::NotRigid: return "not-rigid";
    case Status::ConjecturallyRigid: return "conjecturally-rigid";
    }
    throw std::logic_error("unreachable");
}

std::string to_string(StepKind k)
{
    switch (k) {
    case StepKind::UnitExponent: return "unit-exponent";
    case StepKind::DoubleTwo: return "double-two";
    case StepKind::BaseSurfaceKZ: return "base-surface-kz";
    case StepKind::AmplitudeNonNegative: return "amplitude-non-negative";
    case StepKind::FanoThreefoldCase: return "fano-threefold-case";
    case StepKind::FanoOpenCase: return "fano-open-case";
    case StepKind::CotypeAtLeastTwoDrop: return "cotype-at-least-two-drop";
    case StepKind::CotypeOneLcmSubstitution: return "cotype-one-lcm-substitution";
    case StepKind::OrderPropagation: return "order-propagation";
    }
    throw std::logic_error("unreachable");
}

std::string citation_tag(const ExponentTuple& canonical)
{
    static const std::map<std::vector<Int>, std::string> table = {
        {{2, 3, 3, 6}, "cpw-du-val-classification"},
        {{2, 3, 6, 6}, "cpw-du-val-classification"},
        {{2, 4, 4, 4}, "cpw-du-val-classification"},
        {{3, 3, 3, 3}, "cpw-du-val-classification"},
        {{3, 3, 4, 4}, "cheltsov-log-canonical-lemma"},
        {{3, 3, 5, 5}, "cheltsov-log-canonical-lemma"},
        {{2, 3, 4, 12}, "del-pezzo-degree-2-contraction"},
        {{2, 3, 5, 30}, "del-pezzo-degree-1-contraction"},
    };
    auto it = table.find(canonical.entries());
    if (it == table.end())
        throw std::logic_error("tuple is not a settled Fano threefold case: " + canonical.str());
    return it->second;
}

bool propagate_rigidity(const ExponentTuple& s_known, const ExponentTuple& s_target, std::size_t i)
{
    return leq_order(s_known, s_target, i);
}

std::pair<ExponentTuple, ExponentTuple> cotype_one_substitute(const ExponentTuple& s, std::size_t i)
{
    // i must fail the divisibility test; in particular cotype 0 always errors
    std::vector<std::size_t> offending = nondividing_indices(s);
    bool is_offending = false;
    for (std::size_t j : offending)
        is_offending |= j == i;
    if (!is_offending)
        throw std::invalid_argument("index " + std::to_string(i) + " is not an offending index of "
                                    + s.str());

    Int rest_lcm = 1;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (j != i)
            rest_lcm = int_lcm(rest_lcm, s[j]);

    std::vector<Int> substituted = s.entries();
    substituted[i] = s[i] * rest_lcm;
    std::vector<Int> comparison = s.entries();
    comparison[i] = rest_lcm;
    return {ExponentTuple(std::move(substituted)), ExponentTuple(std::move(comparison))};
}

namespace {

Verdict classify_in_gamma(const ExponentTuple& s);

// cotype >= 2: killing the coordinate of one offending index induces a
// derivation on the dropped ring, which stays in Gamma_{n-1}. Ties are broken
// by dropping the largest offending index.
Verdict classify_cotype_at_least_two(const ExponentTuple& s, const std::vector<std::size_t>& offending)
{
    std::size_t at = offending.back();
    ExponentTuple child = drop(s, at);
    if (gamma_class(child) == GammaClass::NotInGamma)
        throw std::logic_error("dropped tuple left the Gamma class: " + child.str());
    Verdict sub = classify_in_gamma(child);
    ProofStep step{StepKind::CotypeAtLeastTwoDrop, at, 0, child, "", {std::move(sub.trace)}};
    return {s, sub.status, std::move(step), std::nullopt};
}

// cotype 1: rigidity of B_S follows from rigidity of the substituted ring
// B_{S with a_i -> a_i L}, which in turn follows from the cotype-0 comparison
// tuple below it in the <=^i order.
Verdict classify_cotype_one(const ExponentTuple& s, std::size_t at)
{
    auto [substituted, comparison] = cotype_one_substitute(s, at);
    if (!leq_order(comparison, substituted, at))
        throw std::logic_error("comparison tuple does not sit below the substitution");
    if (cotype(comparison) != 0 || gamma_class(comparison) == GammaClass::NotInGamma)
        throw std::logic_error("comparison tuple left the cotype-0 Gamma class: " + comparison.str());
    Verdict sub = classify_in_gamma(comparison);
    ProofStep propagation{StepKind::OrderPropagation, at, 0, comparison, "", {std::move(sub.trace)}};
    ProofStep step{StepKind::CotypeOneLcmSubstitution, at, 0, substituted, "", {std::move(propagation)}};
    return {s, sub.status, std::move(step), std::nullopt};
}

Verdict classify_in_gamma(const ExponentTuple& s)
{
    if (s.dim() == 2)
        return {s, Status::Rigid, ProofStep{StepKind::BaseSurfaceKZ, 0, 0, std::nullopt, "", {}}, std::nullopt};

    std::vector<std::size_t> offending = nondividing_indices(s);
    if (offending.size() >= 2)
        return classify_cotype_at_least_two(s, offending);
    if (offending.size() == 1)
        return classify_cotype_one(s, offending[0]);

    // cotype 0: Proj B is a well-formed quasismooth hypersurface
    if (amplitude(s) >= 0)
        return {s, Status::Rigid, ProofStep{StepKind::AmplitudeNonNegative, 0, 0, std::nullopt, "", {}},
                std::nullopt};
    if (s.dim() == 3) {
        ExponentTuple canonical = s.canonical();
        ProofStep step{StepKind::FanoThreefoldCase, 0, 0, canonical, citation_tag(canonical), {}};
        return {s, Status::Rigid, std::move(step), std::nullopt};
    }
    return {s, Status::ConjecturallyRigid, ProofStep{StepKind::FanoOpenCase, 0, 0, std::nullopt, "", {}},
            std::nullopt};
}

unsigned certification_bound(const ExponentTuple& s)
{
    Int max = 0;
    for (const Int& a : s.entries())
        if (a > max)
            max = a;
    return static_cast<unsigned>(to_int64(2 * max + 2));
}

Verdict certified_not_rigid(const ExponentTuple& s, ProofStep step, Witness witness)
{
    if (!is_well_defined(witness.derivation, witness.ring))
        throw std::logic_error("witness derivation is not well-defined");
    NilpotencyCertificate cert = check_locally_nilpotent(witness.derivation, witness.ring, certification_bound(s));
    if (!cert.certified)
        throw std::logic_error("witness derivation failed nilpotency certification");
    return {s, Status::NotRigid, std::move(step), std::move(witness)};
}

} // namespace

Verdict classify(const ExponentTuple& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 1)
            return certified_not_rigid(s, ProofStep{StepKind::UnitExponent, i, 0, std::nullopt, "", {}},
                                       witness_unit_exponent(s));

    std::vector<std::size_t> twos;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == 2)
            twos.push_back(i);
    if (twos.size() >= 2)
        return certified_not_rigid(s, ProofStep{StepKind::DoubleTwo, twos[0], twos[1], std::nullopt, "", {}},
                                   witness_double_two(s));

    return classify_in_gamma(s);
}

} // namespace pbrigid
