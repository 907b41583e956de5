/*
   Copyright 2026 The flagbott Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FLAGBOTT_ERRORS_HPP
#define FLAGBOTT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace flagbott {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient rings.
class RingMismatch : public Error {
   public:
    using Error::Error;
};

/// Argument outside the documented domain (composite modulus, k > n, ...).
class DomainError : public Error {
   public:
    using Error::Error;
};

class InhomogeneousSubstitution : public Error {
   public:
    using Error::Error;
};

/// A polynomial expected to be invariant under a reflection group is not.
class NotInvariant : public Error {
   public:
    using Error::Error;
};

class UnsupportedCentralizer : public Error {
   public:
    using Error::Error;
};

/// A torsion prime of some stage is not invertible in the coefficient ring.
class InadmissibleCoefficients : public Error {
   public:
    using Error::Error;
};

/// Structurally invalid tower description (dimensions, ill-defined maps).
class InvalidSpec : public Error {
   public:
    using Error::Error;
};

class ParseError : public InvalidSpec {
   public:
    ParseError(int line, int column, const std::string& what)
        : InvalidSpec(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

   private:
    int line_;
    int column_;
};

/// Groebner computation exceeded its S-pair or degree budget.
class BudgetExceeded : public Error {
   public:
    using Error::Error;
};

/// Two routes that must agree did not (e.g. non-exact Poincare division).
class ConsistencyError : public Error {
   public:
    using Error::Error;
};

class EliminationError : public Error {
   public:
    using Error::Error;
};

}  // namespace flagbott

#endif  // FLAGBOTT_ERRORS_HPP
