// Copyright (c) 2026 The lyapcert authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LYAPCERT_ERRORS_HPP
#define LYAPCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lyap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LYAPCERT_DEFINE_ERROR(NAME)                                           \
  struct NAME : Error {                                                       \
    using Error::Error;                                                       \
  }

// expr evaluation
LYAPCERT_DEFINE_ERROR(DivisionByZero);
LYAPCERT_DEFINE_ERROR(NonFiniteResult);
LYAPCERT_DEFINE_ERROR(DomainError);
LYAPCERT_DEFINE_ERROR(ParseError);

// network / training
LYAPCERT_DEFINE_ERROR(DimensionMismatch);
LYAPCERT_DEFINE_ERROR(NonFiniteRisk);

// lqr
LYAPCERT_DEFINE_ERROR(OriginSingularity);
LYAPCERT_DEFINE_ERROR(NonEquilibrium);
LYAPCERT_DEFINE_ERROR(NotStabilizable);
LYAPCERT_DEFINE_ERROR(IllConditioned);

// bench
LYAPCERT_DEFINE_ERROR(UnknownBenchmark);
LYAPCERT_DEFINE_ERROR(BadParams);
LYAPCERT_DEFINE_ERROR(NoReferenceData);

// roa / cegis / cli
LYAPCERT_DEFINE_ERROR(CannotCertify);
LYAPCERT_DEFINE_ERROR(NonFiniteState);
LYAPCERT_DEFINE_ERROR(LqrInitFailed);
LYAPCERT_DEFINE_ERROR(ConfigError);
LYAPCERT_DEFINE_ERROR(IoError);

#undef LYAPCERT_DEFINE_ERROR

} // namespace lyap

#endif // LYAPCERT_ERRORS_HPP
