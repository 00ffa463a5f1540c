#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtop {

/// Base class for every error raised by the library. The CLI maps any
/// gtop::Error escaping a command to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class CarrierMismatch : public Error {
 public:
  using Error::Error;
  CarrierMismatch()
      : Error("carrier mismatch: element or operand outside the common "
              "carrier") {}
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class MissingEmptySet : public Error {
 public:
  MissingEmptySet() : Error("family does not contain the empty set") {}
};

/// Witness pair whose union is absent from the family.
class NotUnionClosed : public Error {
 public:
  NotUnionClosed(const std::string& what, std::uint64_t u, std::uint64_t v)
      : Error(what), u_bits(u), v_bits(v) {}
  std::uint64_t u_bits;
  std::uint64_t v_bits;
};

class NotSubfamily : public Error {
 public:
  using Error::Error;
  NotSubfamily() : Error("family is not a subfamily of the topology") {}
};

class EmptySubspace : public Error {
 public:
  EmptySubspace() : Error("subspace carrier must be nonempty") {}
};

class NotAssociative : public Error {
 public:
  NotAssociative(const std::string& what, int x, int y, int z)
      : Error(what), x(x), y(y), z(z) {}
  int x, y, z;
};

class NoIdentity : public Error {
 public:
  NoIdentity() : Error("table has no two-sided identity element") {}
};

class NoInverse : public Error {
 public:
  NoInverse(const std::string& what, int x) : Error(what), x(x) {}
  int x;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class PointNotInSet : public Error {
 public:
  using Error::Error;
  PointNotInSet() : Error("point does not belong to the given set") {}
};

class NotABase : public Error {
 public:
  using Error::Error;
  NotABase() : Error("family is not a base of the topology") {}
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
  NotASubgroup() : Error("subset is not a subgroup") {}
};

class IdentityNotInSet : public Error {
 public:
  IdentityNotInSet() : Error("set does not contain the identity element") {}
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation's checked postcondition is violated. For the
/// theorem-backed postconditions this is unreachable unless the sweep engine
/// would have reported a counterexample first.
class PostconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace gtop
