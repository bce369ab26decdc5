// Copyright 2026 The cgmeasure Authors
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

#ifndef CGMEAS_ERRORS_HPP
#define CGMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cgmeas {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Matrix shape does not match what the operation requires.
class DimensionError : public Error {
   public:
    using Error::Error;
};

/// Input expected to be Hermitian is not, beyond tolerance.
class SymmetryError : public Error {
   public:
    using Error::Error;
};

/// A density-matrix precondition (Hermiticity, unit trace, positivity) failed.
class PhysicalityError : public Error {
   public:
    using Error::Error;
};

/// Argument outside its mathematical domain.
class DomainError : public Error {
   public:
    using Error::Error;
};

/// Requested size exceeds what a given evaluation path supports.
class ScaleError : public Error {
   public:
    using Error::Error;
};

}  // namespace cgmeas

#endif  // CGMEAS_ERRORS_HPP
