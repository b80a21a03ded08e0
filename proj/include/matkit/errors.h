// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATKIT_ERRORS_H_
#define MATKIT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matkit {

// Base of every error raised by the toolkit. Absence of a solution is never
// an error; it is reported in-band through std::optional.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input does not describe a valid object (bad element ids, malformed
// descriptors, out-of-range parameters).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class GroundSetTooLarge : public Error {
 public:
  GroundSetTooLarge(int size, int limit)
      : Error("ground set of size " + std::to_string(size) +
              " exceeds enumeration limit " + std::to_string(limit)) {}
};

class GroundSetTooSmall : public Error {
 public:
  using Error::Error;
};

class EmptyTargetFamily : public Error {
 public:
  using Error::Error;
};

class TrivialParams : public Error {
 public:
  TrivialParams()
      : Error("(min, IS, <=) is the trivial MOL problem and has no reduction") {}
};

class AlphaOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnsupportedTopology : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class EmptyFeasible : public Error {
 public:
  using Error::Error;
};

class NoBracket : public Error {
 public:
  using Error::Error;
};

class ChainSearchFailed : public Error {
 public:
  using Error::Error;
};

// A plug-in solver broke its contract (e.g. returned an infeasible set).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// A mathematical identity that must hold did not. Signals a defect.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// An external decider broke the line protocol.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

}  // namespace matkit

#endif  // MATKIT_ERRORS_H_
