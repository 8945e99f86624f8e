#include "ghkit/errors.hpp"

namespace ghkit {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::M1: return "M1";
    case Axiom::M2: return "M2";
    case Axiom::M3: return "M3";
    case Axiom::M4: return "M4";
  }
  return "?";
}

namespace {

std::string describe(Axiom a, std::size_t i, std::size_t j, std::size_t k) {
  std::string msg = std::string("axiom ") + axiom_name(a) + " violated at (" +
                    std::to_string(i) + ", " + std::to_string(j);
  if (a == Axiom::M4) msg += ", " + std::to_string(k);
  return msg + ")";
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::size_t i, std::size_t j, std::size_t k)
    : Error(describe(axiom, i, j, k)), axiom_(axiom), i_(i), j_(j), k_(k) {}

SizeGuardExceeded::SizeGuardExceeded(std::size_t n, std::size_t m, std::size_t guard)
    : Error("SizeGuardExceeded: spaces of " + std::to_string(n) + " and " +
            std::to_string(m) + " points exceed the guard of " +
            std::to_string(guard)) {}

HypothesisViolated::HypothesisViolated(std::string which, const std::string& detail)
    : Error("HypothesisViolated{" + which + "}: " + detail), which_(std::move(which)) {}

}  // namespace ghkit
