#pragma once

#include "pbrigid/arith.hpp"
#include "pbrigid/symb.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbrigid {

enum class Status { Rigid, NotRigid, ConjecturallyRigid };

std::string to_string(Status s);

enum class StepKind {
    UnitExponent,             // some a_i = 1: the ring is a polynomial ring
    DoubleTwo,                // two exponents equal 2: explicit slice derivation
    BaseSurfaceKZ,            // n = 2 base case (Kaliman-Zaidenberg)
    AmplitudeNonNegative,     // cotype 0, alpha >= 0: canonical class pseudoeffective
    FanoThreefoldCase,        // n = 3 cotype 0, alpha < 0: one of the eight settled cases
    FanoOpenCase,             // n >= 4 cotype 0, alpha < 0: open
    CotypeAtLeastTwoDrop,     // induct on a dropped coordinate
    CotypeOneLcmSubstitution, // replace the offending exponent by exponent * lcm(rest)
    OrderPropagation,         // rigidity transfer along <=^i
};

std::string to_string(StepKind k);

struct ProofStep {
    StepKind kind;
    std::size_t index_a = 0;            // primary index (dropped/replaced/unit/...)
    std::size_t index_b = 0;            // second index for DoubleTwo
    std::optional<ExponentTuple> tuple; // case tuple / substituted tuple / comparison tuple
    std::string citation;               // FanoThreefoldCase provenance tag
    std::vector<ProofStep> children;    // at most one
};

struct Verdict {
    ExponentTuple tuple;
    Status status;
    ProofStep trace;
    std::optional<Witness> witness; // present exactly when NotRigid
};

// Total decision procedure. NotRigid verdicts carry a certified derivation;
// Rigid/ConjecturallyRigid traces bottom out in a proved or open base case.
Verdict classify(const ExponentTuple& s);

// True iff s_known <=^i s_target, so a rigidity verdict transfers.
bool propagate_rigidity(const ExponentTuple& s_known, const ExponentTuple& s_target, std::size_t i);

// For cotype(S) = 1 with offending index i: returns S with a_i replaced by
// a_i * lcm(S_i), together with the cotype-0 comparison tuple (S_i extended
// by lcm(S_i) at position i) that sits below it in the <=^i order.
std::pair<ExponentTuple, ExponentTuple> cotype_one_substitute(const ExponentTuple& s, std::size_t i);

// Provenance tag for a canonical Gamma_3^- representative.
std::string citation_tag(const ExponentTuple& canonical);

} // namespace pbrigid
