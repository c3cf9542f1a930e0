#pragma once

#include <stdexcept>
#include <string>

namespace orbitquant {

/* Every precondition violation in the library throws Error with a code
 * identifying the failure class.  The CLI maps codes to process exit
 * status: catalog gaps (NotInCatalog, MissingSpec) exit 3, everything
 * else invalid-input exits 2.
 */
enum class Errc {
  NotDecreasing,            // partition parts not weakly decreasing / nonpositive
  ParityViolation,          // a part's multiplicity breaks the B/C parity rule
  WrongTotalParity,         // partition total has wrong parity for its kind
  TotalParityMismatch,      // collapse target kind incompatible with total
  KindMismatch,             // operation needs a partition of another kind
  WrongFamily,              // partition is not of the required (2^a 1^b) shape
  RankMismatch,             // vector/group ranks disagree
  NotDominant,              // weight expected dominant is not
  NotInCatalog,             // no catalog entry for the orbit
  MissingSpec,              // catalog entry lacks a subgroup spec the sum needs
  CatalogMismatch,          // catalog entry violates the arrangement invariant
  NonIntegralMultiplicity,  // K-type scan produced a non-integer
  HalfIntegralSupport,      // operation requires integral weights
  ParseError,               // malformed spec string / catalog file
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace orbitquant
