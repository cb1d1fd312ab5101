// Copyright 2026 The uvar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace uvar {

/// Base of every domain error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define UVAR_DEFINE_ERROR(Name)          \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// weyl
UVAR_DEFINE_ERROR(PowerOverflow);
UVAR_DEFINE_ERROR(SingularSubstitution);
UVAR_DEFINE_ERROR(ParseError);
// oplib
UVAR_DEFINE_ERROR(BadTau);
UVAR_DEFINE_ERROR(UnknownLabel);
UVAR_DEFINE_ERROR(DegenerateEta);
UVAR_DEFINE_ERROR(NotADerivation);
UVAR_DEFINE_ERROR(NonTerminatingFlow);
UVAR_DEFINE_ERROR(NotHermitian);
// repr
UVAR_DEFINE_ERROR(NonHolomorphic);
UVAR_DEFINE_ERROR(NotInvariantSubspace);
UVAR_DEFINE_ERROR(BadDeterminant);
// fock
UVAR_DEFINE_ERROR(AsymmetricInteraction);
// branching
UVAR_DEFINE_ERROR(NonUnitaryRule);
UVAR_DEFINE_ERROR(AmplitudeReadingRule);
UVAR_DEFINE_ERROR(BadParams);
UVAR_DEFINE_ERROR(DegeneratePhases);

#undef UVAR_DEFINE_ERROR

}  // namespace uvar
