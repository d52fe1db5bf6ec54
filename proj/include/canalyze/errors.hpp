/*
   Copyright 2026 The canalyze Authors

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

#pragma once

#include <stdexcept>

namespace canalyze {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
   public:
    using Error::Error;
};

class SizeLimitExceeded : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    using Error::Error;
};

class DimensionMismatch : public Error {
   public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
   public:
    using Error::Error;
};

class NotCanalyzing : public Error {
   public:
    using Error::Error;
};

class DuplicateInputValues : public Error {
   public:
    using Error::Error;
};

class TooManyPairs : public Error {
   public:
    using Error::Error;
};

// Malformed arguments that have no dedicated kind (bad element codes,
// degree bounds, composition shapes).
class InvalidArgument : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

}  // namespace canalyze
