#ifndef TAUTILT_ERRORS_HPP
#define TAUTILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tautilt {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define TAUTILT_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                             \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// input / presentation problems
TAUTILT_DEFINE_ERROR(ParseError);
TAUTILT_DEFINE_ERROR(MalformedRelation);
TAUTILT_DEFINE_ERROR(NotAdmissibleWithinCap);
TAUTILT_DEFINE_ERROR(EmptyOrFullVertexSet);
TAUTILT_DEFINE_ERROR(BadParams);
TAUTILT_DEFINE_ERROR(UnsupportedFamily);
TAUTILT_DEFINE_ERROR(UnsupportedField);

// module-level problems
TAUTILT_DEFINE_ERROR(AlgebraMismatch);
TAUTILT_DEFINE_ERROR(ZeroModule);
TAUTILT_DEFINE_ERROR(NonSplitResidue);
TAUTILT_DEFINE_ERROR(NotAQuotient);
TAUTILT_DEFINE_ERROR(NotBasic);
TAUTILT_DEFINE_ERROR(NotIndecomposable);

// pair / graph problems
TAUTILT_DEFINE_ERROR(InvariantViolation);
TAUTILT_DEFINE_ERROR(NotTauTilting);
TAUTILT_DEFINE_ERROR(ExchangeFailure);
TAUTILT_DEFINE_ERROR(IncompleteGraph);
TAUTILT_DEFINE_ERROR(NoContainingNode);
TAUTILT_DEFINE_ERROR(PresentationFailure);

// fan / stability problems
TAUTILT_DEFINE_ERROR(SingularCone);
TAUTILT_DEFINE_ERROR(CapExceeded);
TAUTILT_DEFINE_ERROR(RankMismatch);

// internal consistency failures that should never fire on valid inputs
TAUTILT_DEFINE_ERROR(InternalError);

#undef TAUTILT_DEFINE_ERROR

}  // namespace tautilt

#endif
