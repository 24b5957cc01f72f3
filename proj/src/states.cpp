#include "entmeter/states.hpp"

#include <cmath>
#include <string>

#include "entmeter/errors.hpp"
#include "entmeter/random.hpp"

namespace entmeter {

namespace {

void check_amplitude(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ArgumentError("amplitude x must lie in [0, 1], got " + std::to_string(x));
  }
}

PureState from_terms(const SystemShape& shape, std::initializer_list<std::size_t> indices) {
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  for (auto i : indices) amps(static_cast<Eigen::Index>(i)) = 1.0;
  return PureState::normalized(shape, std::move(amps));
}

}  // namespace

PureState ghz3(double x) {
  check_amplitude(x);
  CVector amps = CVector::Zero(8);
  amps(0) = x;
  amps(7) = std::sqrt(std::max(0.0, 1.0 - x * x));
  return PureState::normalized(SystemShape({2, 2, 2}), std::move(amps));
}

PureState w3() {
  return from_terms(SystemShape({2, 2, 2}), {0b001, 0b010, 0b100});
}

PureState w3_paper_variant() {
  return from_terms(SystemShape({2, 2, 2}), {0b011, 0b010, 0b110});
}

PureState biseparable3(BiseparablePair pair) {
  const SystemShape shape({2, 2, 2});
  switch (pair) {
    case BiseparablePair::AB:
      return from_terms(shape, {0b010, 0b100});
    case BiseparablePair::AC:
      return from_terms(shape, {0b001, 0b100});
    case BiseparablePair::BC:
      break;
  }
  return from_terms(shape, {0b001, 0b010});
}

PureState ghz4(double x, GhzSign sign) {
  check_amplitude(x);
  CVector amps = CVector::Zero(16);
  amps(0) = x;
  const double tail = std::sqrt(std::max(0.0, 1.0 - x * x));
  amps(15) = sign == GhzSign::Plus ? tail : -tail;
  return PureState::normalized(SystemShape({2, 2, 2, 2}), std::move(amps));
}

PureState bell() {
  return from_terms(SystemShape({2, 2}), {0b00, 0b11});
}

PureState bell_pair_product() {
  const SystemShape pair({2, 2});
  return product({from_terms(pair, {0b00, 0b11}), from_terms(pair, {0b01, 0b10})});
}

PureState basis_state(const SystemShape& shape, const std::vector<int>& digits) {
  if (digits.size() != shape.parties()) {
    throw ArgumentError("basis_state: one digit per subsystem required");
  }
  std::size_t index = 0;
  for (std::size_t s = 0; s < digits.size(); ++s) {
    if (digits[s] < 0 || digits[s] >= shape.dim(s)) {
      throw ArgumentError("basis_state: digit out of range");
    }
    index = index * static_cast<std::size_t>(shape.dim(s)) + static_cast<std::size_t>(digits[s]);
  }
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(shape.total_dim()));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(shape, std::move(amps));
}

PureState product(const std::vector<PureState>& factors) {
  if (factors.empty()) {
    throw ArgumentError("product of an empty list of states");
  }
  SystemShape shape = factors.front().shape();
  CMatrix amps = factors.front().amplitudes();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    shape = shape.concat(factors[i].shape());
    amps = kron(amps, factors[i].amplitudes());
  }
  return PureState::normalized(std::move(shape), CVector(amps.col(0)));
}

PureState random_pure(const SystemShape& shape, Rng& rng) {
  CVector amps(static_cast<Eigen::Index>(shape.total_dim()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) amps(i) = rng.complex_normal();
  return PureState::normalized(shape, std::move(amps));
}

PureState random_pure(const SystemShape& shape, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(shape, rng);
}

PureState random_local_unitary(const PureState& psi, Rng& rng) {
  CVector amps = psi.amplitudes();
  for (std::size_t site = 0; site < psi.shape().parties(); ++site) {
    amps = apply_local(random_unitary(psi.shape().dim(site), rng), site, psi.shape(), amps);
  }
  return PureState::normalized(psi.shape(), std::move(amps));
}

PureState make_state(const StateSpec& spec) {
  switch (spec.name) {
    case StateName::Ghz3:
      return ghz3(spec.x);
    case StateName::W3:
      return w3();
    case StateName::W3PaperVariant:
      return w3_paper_variant();
    case StateName::Biseparable3:
      return biseparable3(spec.pair);
    case StateName::Ghz4:
      return ghz4(spec.x, spec.sign);
    case StateName::Bell:
      return bell();
    case StateName::BellPairProduct:
      return bell_pair_product();
    case StateName::Product:
      return product(spec.factors);
    case StateName::Custom:
      if (!spec.custom) throw ArgumentError("custom state spec without amplitudes");
      return *spec.custom;
  }
  throw ArgumentError("unknown state name");
}

std::optional<StateSpec> parse_state_name(std::string_view name) {
  StateSpec spec;
  if (name == "ghz3") {
    spec.name = StateName::Ghz3;
  } else if (name == "ghz4") {
    spec.name = StateName::Ghz4;
  } else if (name == "ghz4-minus") {
    spec.name = StateName::Ghz4;
    spec.sign = GhzSign::Minus;
  } else if (name == "w3") {
    spec.name = StateName::W3;
  } else if (name == "w3-paper") {
    spec.name = StateName::W3PaperVariant;
  } else if (name == "bell") {
    spec.name = StateName::Bell;
  } else if (name == "bell-pair") {
    spec.name = StateName::BellPairProduct;
  } else if (name == "biseparable-ab") {
    spec.name = StateName::Biseparable3;
    spec.pair = BiseparablePair::AB;
  } else if (name == "biseparable-ac") {
    spec.name = StateName::Biseparable3;
    spec.pair = BiseparablePair::AC;
  } else if (name == "biseparable-bc") {
    spec.name = StateName::Biseparable3;
    spec.pair = BiseparablePair::BC;
  } else {
    return std::nullopt;
  }
  return spec;
}

}  // namespace entmeter
