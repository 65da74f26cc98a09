#ifndef GROUPOIDAL_ERRORS_HPP
#define GROUPOIDAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpd {

// Base for all failures raised by the library. The `kind` string is stable
// and machine-readable; `what()` carries the human-readable detail with the
// offending witnesses spelled out.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

struct AxiomViolation : Error {
  AxiomViolation(const std::string& law, const std::string& witness)
      : Error("AxiomViolation", law + " [witness: " + witness + "]") {}
};

struct NotAGroup : Error {
  explicit NotAGroup(const std::string& msg) : Error("NotAGroup", msg) {}
};

struct NotInvariant : Error {
  explicit NotInvariant(const std::string& msg) : Error("NotInvariant", msg) {}
};

struct NotQuasiInvariant : Error {
  explicit NotQuasiInvariant(const std::string& msg) : Error("NotQuasiInvariant", msg) {}
};

struct EmptyGroupoid : Error {
  explicit EmptyGroupoid(const std::string& msg) : Error("EmptyGroupoid", msg) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch", msg) {}
};

struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& msg) : Error("NotPositiveDefinite", msg) {}
};

struct NotHermitian : Error {
  explicit NotHermitian(const std::string& msg) : Error("NotHermitian", msg) {}
};

struct NoConvergence : Error {
  NoConvergence(long iterations, const std::string& msg)
      : Error("NoConvergence", msg + " after " + std::to_string(iterations) + " iterations"),
        iterations(iterations) {}
  long iterations;
};

struct WitnessRejected : Error {
  explicit WitnessRejected(const std::string& reason) : Error("WitnessRejected", reason) {}
};

struct ValidationFailed : Error {
  ValidationFailed(const std::string& condition, const std::string& witness)
      : Error("ValidationFailed", condition + " [witness: " + witness + "]") {}
};

struct BasisNotSpanning : Error {
  explicit BasisNotSpanning(const std::string& msg) : Error("BasisNotSpanning", msg) {}
};

struct NotALinear : Error {
  explicit NotALinear(const std::string& msg) : Error("NotALinear", msg) {}
};

struct PipelineMismatch : Error {
  PipelineMismatch(const std::string& stage, double deviation)
      : Error("PipelineMismatch",
              "stage " + stage + ", deviation " + std::to_string(deviation)),
        stage(stage), deviation(deviation) {}
  std::string stage;
  double deviation;
};

struct AbsorptionFailed : Error {
  AbsorptionFailed(const std::string& element, double deviation)
      : Error("AbsorptionFailed",
              "at " + element + ", deviation " + std::to_string(deviation)) {}
};

struct InjectivityFailed : Error {
  explicit InjectivityFailed(const std::string& msg) : Error("InjectivityFailed", msg) {}
};

struct NotInSpan : Error {
  explicit NotInSpan(const std::string& msg) : Error("NotInSpan", msg) {}
};

struct SupportViolation : Error {
  explicit SupportViolation(const std::string& msg) : Error("SupportViolation", msg) {}
};

struct IntertwiningFailed : Error {
  IntertwiningFailed(const std::string& element, double deviation)
      : Error("IntertwiningFailed",
              "at " + element + ", deviation " + std::to_string(deviation)) {}
};

struct NotWide : Error {
  NotWide(const std::string& condition, const std::string& witness)
      : Error("NotWide", condition + " [witness: " + witness + "]") {}
};

struct SpectrumTooLarge : Error {
  explicit SpectrumTooLarge(const std::string& msg) : Error("SpectrumTooLarge", msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("UsageError", msg) {}
};

}  // namespace gpd

#endif
