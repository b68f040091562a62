#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kuifje/loss/loss.hpp"

namespace kuifje {

enum class Provenance { Builtin, Witness, User, Random };

const char* provenance_name(Provenance p);

struct FamilyEntry {
  LossFunction loss;
  Provenance provenance;
  std::string label;
};

/// A finite list of post losses standing in for "every E". Checks against a
/// family are only as strong as the family.
struct TestFamily {
  CtxPtr ctx;
  std::vector<FamilyEntry> entries;
  std::size_t size() const { return entries.size(); }
};

struct FamilyOptions {
  int max_subset = 2;           // subset indicators up to this size
  int random = 0;               // seeded random losses
  std::uint64_t seed = 1;
  std::size_t max_entries = 20000;
};

/// Deterministic family over ctx:
///   [[x=s]] for each state, 1, ¬[[x=s]], [[x∈T]] and MIN_{s∈T}[[x=s]] for
///   2 ≤ |T| ≤ k, MIN over all singletons, then `random` losses with up to 4
///   generators and entries in [0,2]. Raises DomainError past max_entries.
TestFamily standard_family(const CtxPtr& ctx, const FamilyOptions& opts = {});

/// A family recipe applied per post context: extra losses whose variables
/// match come first, then the standard family.
struct FamilySpec {
  FamilyOptions options;
  std::vector<FamilyEntry> extra;
  TestFamily build(const CtxPtr& ctx) const;
};

/// Seeded random loss: 1 to max_gens generators, entries p/q in [0,2].
LossFunction random_loss(const CtxPtr& ctx, std::mt19937_64& rng, int max_gens = 4);

/// Uniform-ish draw from [0, n), identical on every platform.
inline std::size_t rand_below(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace kuifje
