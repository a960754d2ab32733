#pragma once

#include <stdexcept>
#include <string>

namespace tropgroups {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TROPGROUPS_ERROR(Name)             \
  class Name : public Error {              \
   public:                                 \
    explicit Name(const std::string& what) \
        : Error(#Name ": " + what) {}      \
  }

TROPGROUPS_ERROR(ParseError);
TROPGROUPS_ERROR(DimensionMismatch);
TROPGROUPS_ERROR(MultipleEigenvalues);
TROPGROUPS_ERROR(NoIdempotentPower);
TROPGROUPS_ERROR(ZeroMatrix);
TROPGROUPS_ERROR(DegenerateRowOrColumn);
TROPGROUPS_ERROR(NotAComponent);
TROPGROUPS_ERROR(SearchBudgetExceeded);
TROPGROUPS_ERROR(NotFullRank);
TROPGROUPS_ERROR(NotIdempotent);
TROPGROUPS_ERROR(OrderCapExceeded);
TROPGROUPS_ERROR(NotFaithful);
TROPGROUPS_ERROR(NotTwoClosed);
TROPGROUPS_ERROR(ReducibleInput);
TROPGROUPS_ERROR(HypothesisViolated);
TROPGROUPS_ERROR(DependentEntries);
TROPGROUPS_ERROR(InternalError);

#undef TROPGROUPS_ERROR

}  // namespace tropgroups
