#pragma once

#include <stdexcept>
#include <string>

namespace hopfalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

class InvalidSelector : public Error {
 public:
  using Error::Error;
};

// M is not finitely generated projective on the side required.
class NotProjective : public Error {
 public:
  using Error::Error;
};

class NoAntipode : public Error {
 public:
  using Error::Error;
};

class NoOppositeAntipode : public Error {
 public:
  using Error::Error;
};

// A map defined on representatives fails to kill the relation span.
class IllDefined : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace hopfalg
