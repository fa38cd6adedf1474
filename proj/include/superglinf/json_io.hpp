#pragma once

#include <json.hpp>

#include "superglinf/blockprogram.hpp"
#include "superglinf/extension.hpp"
#include "superglinf/invariants.hpp"
#include "superglinf/loops.hpp"
#include "superglinf/permutation.hpp"
#include "superglinf/supermatrix.hpp"

namespace superglinf::io {

using Json = nlohmann::ordered_json;

// Parsers accept the documented object forms plus the builtin shorthands
// ("p_st", "p_plus", "identity", "shift:n", "tau", "pair_swap").
ParityFunction parse_parity(const Json& j);
Json emit_parity(const ParityFunction& p);

SuperMatrix parse_supermatrix(const Json& j);
Json emit_supermatrix(const SuperMatrix& m);

ExtendedElement parse_extended(const Json& j);
Json emit_extended(const ExtendedElement& x);

FinPermutation parse_permutation(const Json& j);
Json emit_permutation(const FinPermutation& s);

PeriodicBandMatrix parse_periodic(const Json& j);
Json emit_periodic(const PeriodicBandMatrix& m);

BlockProgram parse_block_program(const Json& j);
Json emit_block_program(const BlockProgram& p);

bool is_block_program(const Json& j);

InvolutionSpec parse_involution(const Json& j);

Json emit_classification(const Classification& c);
Json emit_spectrum(const SpectrumEstimate& e);
Json emit_witness(const EquivalenceWitness& w);
Json emit_certificate(const MembershipCertificate& c);

}  // namespace superglinf::io
