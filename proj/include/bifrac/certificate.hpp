#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bifrac/search.hpp"
#include "bifrac/site.hpp"
#include "bifrac/window_io.hpp"
#include "bifrac/witness.hpp"

namespace bifrac {

inline constexpr const char* kCertSchema = "bifrac-cert/1";

/// One recorded pasting step: operation, argument names, result name.
struct Evaluation {
  std::string op;
  std::vector<std::string> args;
  std::string result;
};

/// Membership classes a certificate may refer to.
struct Classes {
  const CellClass* j = nullptr;
  const CellClass* w = nullptr;
};

/// Narrow evaluation interface used by certificate checks. Every call can be
/// logged so that the steps travel with the certificate and can be replayed.
class Evaluator {
 public:
  Evaluator(const TwoCategory& k, Classes classes, std::vector<Evaluation>* log = nullptr)
      : k_(k), classes_(classes), log_(log) {}

  const TwoCategory& cat() const { return k_; }

  OneCell compose(OneCell g, OneCell f);
  TwoCell vcomp(TwoCell b, TwoCell a);
  TwoCell whisker_left(OneCell h, TwoCell a);
  TwoCell whisker_right(TwoCell a, OneCell h);
  OneCell identity(ObjId x);
  TwoCell identity(OneCell f);
  ObjId source(OneCell f);
  ObjId target(OneCell f);
  OneCell source(TwoCell a);
  OneCell target(TwoCell a);
  std::optional<TwoCell> inverse(TwoCell a);
  bool member(const std::string& cls, OneCell f);

 private:
  void record(std::string op, std::vector<std::string> args, std::string result);

  const TwoCategory& k_;
  Classes classes_;
  std::vector<Evaluation>* log_;
};

struct SpanPair {
  FractionSpan s1, s2;
};

struct FractionEquivalence {
  SpanPair spans;
  FractionTwoCellRep r1, r2;
  EquivalenceWitness witness;
};

struct Bf1Equivalence {
  Pseudoinverse p;
};

struct Bf2Composite {
  OneCell g, f;
  LocalSplitting splitting;  // of g∘f
};

using Claim = std::variant<FillerSquare, LocalSplitting, Bf1Equivalence, Bf2Composite, Bf3Square, Bf4Witness,
                           FractionEquivalence>;

const char* kind_of(const Claim& c);

/// Empty when the claim holds; otherwise the name of the violated condition.
std::string check(Evaluator& ev, const Claim& c);

struct Certificate {
  Claim claim;
  std::vector<Evaluation> pastings;
};

/// Runs the check once with recording on. Throws Error(CrossCheckFailure) if
/// the claim does not hold.
Certificate certify(const TwoCategory& k, Classes classes, Claim claim);

struct CertificateBundle {
  std::string instance_hash;
  std::string coverage;
  std::vector<Certificate> certificates;
};

Json to_json(const TwoCategory& k, const CertificateBundle& b);
/// Throws Error(Input) for schema problems; unknown cell names surface as
/// rejections during validation, not here.
Json parse_bundle(const std::string& text);

struct CertVerdict {
  bool ok = true;
  std::vector<std::string> rejections;  // "certificate #i (kind): reason"
  std::size_t checked = 0;
};

/// Replays every recorded pasting entry, then re-runs the claim check from
/// scratch. `k` may be a different but equal-valued evaluator of the instance,
/// e.g. finset::FinsetSemantics.
CertVerdict validate_bundle(const TwoCategory& k, Classes classes, const std::string& instance_hash, const Json& bundle);

}  // namespace bifrac
