#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

enum class Outcome { Pass, Refuted, Inconclusive };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Refuted: return "refuted";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

inline Outcome parse_outcome(const std::string& s) {
  if (s == "pass") return Outcome::Pass;
  if (s == "refuted") return Outcome::Refuted;
  if (s == "inconclusive") return Outcome::Inconclusive;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

// Worst of two outcomes: refuted dominates inconclusive dominates pass.
inline Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Refuted || b == Outcome::Refuted) return Outcome::Refuted;
  if (a == Outcome::Inconclusive || b == Outcome::Inconclusive) return Outcome::Inconclusive;
  return Outcome::Pass;
}

// A computed fact contradicting a proved statement.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cantor
