#pragma once

#include "logsark/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace logsark {

/// Weights [a_1..a_s] (curves of self-intersection -a_j) of the minimal
/// resolution chain of a cyclic quotient singularity. a_1 is the curve meeting
/// the strict transform of the boundary.
using HJChain = std::vector<int>;

/// Cyclic quotient singularity A_{n,q}: 0 < q < n, gcd(n, q) = 1.
struct HJType {
    std::int64_t n = 2;
    std::int64_t q = 1;
    bool operator==(const HJType&) const = default;
};

void check_chain(std::span<const int> chain);
void check_type(const HJType& type);

/// n/q = a_1 - 1/(a_2 - 1/(... - 1/a_s)).
HJType chain_to_type(std::span<const int> chain);
HJChain type_to_chain(const HJType& type);

/// Log discrepancies of the chain curves when the chain hangs off one
/// boundary curve at its a_1 end. All values lie in (0, 1).
std::vector<Rational> chain_log_discrepancies(std::span<const int> chain);

/// "A_{n,q}"
std::string type_name(const HJType& type);

} // namespace logsark
