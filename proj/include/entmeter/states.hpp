#pragma once

// Named states and seeded random states.
//
// The three-qubit W state appears in two forms: `w3` is the symmetric
// (|001> + |010> + |100>)/sqrt 3, whose values are V = 8 + 2/3 (Pauli) and
// mu = 2 sqrt 2 / 3; `w3_paper_variant` is (|011> + |010> + |110>)/sqrt 3,
// which gives V = 62/9 and mu = sqrt(8/27).

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "entmeter/tensor.hpp"

namespace entmeter {

class Rng;

/// Which pair of qubits carries the Bell-type entanglement.
enum class BiseparablePair { AB, AC, BC };
enum class GhzSign { Plus, Minus };

/// x|000> + sqrt(1 - x^2)|111>, x in [0, 1].
PureState ghz3(double x);
PureState w3();
PureState w3_paper_variant();
/// BC: (|001> + |010>)/sqrt 2, AC: (|001> + |100>)/sqrt 2, AB: (|010> + |100>)/sqrt 2.
PureState biseparable3(BiseparablePair pair);
/// x|0000> +- sqrt(1 - x^2)|1111>, x in [0, 1].
PureState ghz4(double x, GhzSign sign = GhzSign::Plus);
/// (|00> + |11>)/sqrt 2.
PureState bell();
/// (|00> + |11>)/sqrt 2 ⊗ (|01> + |10>)/sqrt 2.
PureState bell_pair_product();
/// Computational basis state |digits[0] digits[1] ...>.
PureState basis_state(const SystemShape& shape, const std::vector<int>& digits);

/// Tensor product, shapes concatenated in order.
PureState product(const std::vector<PureState>& factors);

/// Haar-random pure state: i.i.d. complex Gaussians, normalized. Deterministic per seed.
PureState random_pure(const SystemShape& shape, std::uint64_t seed);
PureState random_pure(const SystemShape& shape, Rng& rng);

/// (U_1 ⊗ ... ⊗ U_n)|psi> with independent Haar unitaries per site.
PureState random_local_unitary(const PureState& psi, Rng& rng);

enum class StateName {
  Ghz3,
  W3,
  W3PaperVariant,
  Biseparable3,
  Ghz4,
  Bell,
  BellPairProduct,
  Product,
  Custom,
};

struct StateSpec {
  StateName name = StateName::W3;
  double x = 0.70710678118654752440;
  BiseparablePair pair = BiseparablePair::BC;
  GhzSign sign = GhzSign::Plus;
  std::vector<PureState> factors;   // Product
  std::optional<PureState> custom;  // Custom
};

PureState make_state(const StateSpec& spec);

/// Parses CLI names: ghz3, ghz4, ghz4-minus, w3, w3-paper, bell, bell-pair,
/// biseparable-ab, biseparable-ac, biseparable-bc.
std::optional<StateSpec> parse_state_name(std::string_view name);

}  // namespace entmeter
