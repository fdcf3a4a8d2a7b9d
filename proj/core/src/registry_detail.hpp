#pragma once

#include <vector>

#include "qkernel/identities/registry.hpp"

namespace qk::detail {

void register_gmt_cases(std::vector<IdentityCase>& out);
void register_qbeta_cases(std::vector<IdentityCase>& out);
void register_phi_rep_cases(std::vector<IdentityCase>& out);
void register_genfun_cases(std::vector<IdentityCase>& out);

}  // namespace qk::detail
