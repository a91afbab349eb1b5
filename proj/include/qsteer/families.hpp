#pragma once

#include <optional>
#include <string>

#include "qsteer/density_matrix.hpp"

namespace qsteer {

enum class Family {
  NoisySinglet,      // p |psi-><psi-| + (1-p) (2/3 |00><00| + 1/3 |01><01|)
  IsotropicQutritF,  // F |Phi+><Phi+| + (1-F)/3 (|01><01| + |12><12| + |20><20|)
  Werner2,           // p |psi-><psi-| + (1-p)/4 I
  TwoQutritFprime,   // F' |Phi+><Phi+| + (1-F')/2 (rho1 + rho2)
  Explicit,
};

struct FamilySpec {
  Family family = Family::Explicit;
  double parameter = 0.0;  // in [0, 1]; unused for Explicit
  std::optional<BipartiteState> explicit_state;
};

/// Family id used on the command line and in reports.
std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Builds the requested two-parameter-free state family member.
BipartiteState family_state(const FamilySpec& spec);

inline BipartiteState family_state(Family f, double parameter) {
  return family_state(FamilySpec{f, parameter, std::nullopt});
}

}  // namespace qsteer
