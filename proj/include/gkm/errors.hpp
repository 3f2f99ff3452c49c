#pragma once

#include <stdexcept>
#include <string>

namespace gkm {

// Every library failure carries a stable kind string that the CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define GKM_ERROR(Name)                                              \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  }

GKM_ERROR(DimensionError);
GKM_ERROR(VariableTableMismatch);
GKM_ERROR(ParseError);
GKM_ERROR(StructuralError);
GKM_ERROR(NoValidConnection);
GKM_ERROR(AmbiguousConnection);
GKM_ERROR(NoPartner);
GKM_ERROR(ClosureFailure);
GKM_ERROR(AssumptionOneViolation);
GKM_ERROR(AssumptionViolation);
GKM_ERROR(CongruenceFailure);
GKM_ERROR(PurityFailure);
GKM_ERROR(NotShellable);
GKM_ERROR(InconsistentLambda);
GKM_ERROR(InexactDivision);
GKM_ERROR(UnknownFixture);
GKM_ERROR(PairNotPreserved);
GKM_ERROR(ValidationFailed);
GKM_ERROR(NotPreHalfspace);

#undef GKM_ERROR

}  // namespace gkm
