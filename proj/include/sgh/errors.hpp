#pragma once

#include <stdexcept>
#include <string>

namespace sgh {

// Base of every error the library throws. The CLI maps these to exit code 2,
// except InternalInconsistency, which is a finding (exit code 1).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

#define SGH_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  };

SGH_DEFINE_ERROR(InvalidArgument)
SGH_DEFINE_ERROR(GcdError)
SGH_DEFINE_ERROR(NotMember)
SGH_DEFINE_ERROR(NotInSemigroup)
SGH_DEFINE_ERROR(NotSubset)
SGH_DEFINE_ERROR(NotContained)
SGH_DEFINE_ERROR(SemigroupMismatch)
SGH_DEFINE_ERROR(NotReduction)
SGH_DEFINE_ERROR(InvalidSequence)
SGH_DEFINE_ERROR(PreconditionError)
SGH_DEFINE_ERROR(InternalInconsistency)

#undef SGH_DEFINE_ERROR

}  // namespace sgh
