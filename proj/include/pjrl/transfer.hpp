#pragma once

#include "pjrl/pencil.hpp"
#include "pjrl/polyparse.hpp"

namespace pjrl {

/// Parses a plant expression like "(s+1)/s^2" into a canonical transfer
/// function: expanded numerator and denominator in s, denominator monic,
/// coprimality enforced. Throws ParseError (bad syntax, zero denominator)
/// and NonCoprimeError.
RationalFunction parse_transfer_function(std::string_view text);

}  // namespace pjrl
