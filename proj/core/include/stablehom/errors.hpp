#pragma once

#include <stdexcept>
#include <string>

namespace stablehom {

/// Base of every exception raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two morphisms (or a morphism and a group) do not line up.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A matrix does not send source relations into the target relation lattice.
class IllDefinedMorphism : public Error {
 public:
  using Error::Error;
};

class CompositionNotZero : public Error {
 public:
  using Error::Error;
};

/// A graph vertex lacks an incoming or an outgoing edge.
class NotEssential : public Error {
 public:
  NotEssential(std::string vertex, const std::string& what)
      : Error(what), vertex_(std::move(vertex)) {}
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

/// A map fails to commute with the stationary endomorphisms.
class NotEquivariant : public Error {
 public:
  using Error::Error;
};

class PresentationInvalid : public Error {
 public:
  using Error::Error;
};

/// A double-complex identity failed; carries the offending identity and cell.
class GuardrailFailure : public Error {
 public:
  GuardrailFailure(std::string identity, int l, int m, const std::string& what)
      : Error(what), identity_(std::move(identity)), l_(l), m_(m) {}
  const std::string& identity() const noexcept { return identity_; }
  int row_degree() const noexcept { return l_; }
  int column_degree() const noexcept { return m_; }

 private:
  std::string identity_;
  int l_;
  int m_;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NotHyperbolic : public Error {
 public:
  using Error::Error;
};

class InfiniteRank : public Error {
 public:
  using Error::Error;
};

}  // namespace stablehom
