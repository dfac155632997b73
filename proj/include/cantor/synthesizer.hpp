#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/conditions.hpp"
#include "cantor/cylinders.hpp"
#include "cantor/level_graph.hpp"

namespace cantor {

enum class FamilyKind { AS, A1 };

struct SynthesisInstance {
  FamilyKind family = FamilyKind::AS;
  std::optional<SSpec> s;  // required for AS
  Cylinder restriction;    // B; the empty address is the whole space
  std::size_t depth = 0;

  ThetaSpec theta() const noexcept { return family == FamilyKind::AS ? ThetaSpec::Zeros : ThetaSpec::DenseSeq; }
  std::string describe() const;
};

struct ReductionTable {
  std::size_t depth = 0;
  std::map<Word, Word> u;            // s -> address of U_s, for |s| <= depth
  std::vector<std::uint64_t> phi;    // phi(0..depth-1)
  std::vector<std::uint64_t> theta;  // AS only
};

struct SynthesisResult {
  Outcome status = Outcome::Pass;
  ReductionTable table;  // complete through table.depth
  std::size_t shrink_steps = 0;
  std::string note;
};

SynthesisResult synthesize(const SynthesisInstance& inst, const Bounds& b = {});

struct Violation {
  std::string condition;
  Word s;
  Word t;
  std::string detail;
};

struct TableReport {
  bool precondition_ok = true;
  std::size_t pairs_checked = 0;
  std::vector<Violation> violations;
  bool ok() const noexcept { return precondition_ok && violations.empty(); }
};

// Exhaustive, independent check of conditions (i)-(iv) and, for AS, of the
// card identity on every U_s.
TableReport verify_table(const SynthesisInstance& inst, const ReductionTable& table);

// Address of U_x: the depth-|x| approximation of the reduction map.
Word extract_u(const ReductionTable& table, const Word& x);

// FNV-1a over the canonical text form of the table.
std::string table_digest(const ReductionTable& table);

// Least n >= lower with dense_seq(n) extending c.
std::optional<std::uint64_t> least_dense_extension(const Word& c, std::uint64_t lower);

}  // namespace cantor
