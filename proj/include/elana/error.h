#pragma once

#include <stdexcept>
#include <string>

namespace elana {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed structure: unknown identifiers, bad partitions, caps exceeded.
class StructureError : public Error {
 public:
  using Error::Error;
};

// Concept outside the vocabulary or grammar of the interpretation.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class TranslationError : public Error {
 public:
  using Error::Error;
};

}  // namespace elana
