// Copyright 2026 The qaclab Authors
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

#ifndef QACLAB_ERRORS_H
#define QACLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace qaclab {

/// Base class for every error raised by the library.
class QaclabError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// Sizes, layouts or shapes of the arguments do not fit together.
class ShapeError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// An assignment did not cover a variable that had to be substituted.
class MissingVariableError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// A randomized search gave up after its attempt budget.
class NotFoundError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// An exhaustive procedure would exceed its size cap.
class BudgetExceededError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// A numerical construction produced a result whose residual is above tolerance.
class NumericalDegeneracyError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

/// A constructed object failed its own verification. Raised only if a lemma the
/// construction relies on would be false, so it indicates a bug.
class LemmaViolationError : public QaclabError {
   public:
    using QaclabError::QaclabError;
};

}  // namespace qaclab

#endif
