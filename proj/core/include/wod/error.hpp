#pragma once

#include <stdexcept>
#include <string>

namespace wod {

// Failure classes surfaced by the library. Each maps onto one condition a
// caller can act on; the CLI turns any of these into exit code 2.
enum class Errc {
    ZeroOrder,            // graph must have at least one vertex
    EndpointOutOfRange,   // edge endpoint outside [0, n)
    SelfLoop,             // loops are not representable
    ZeroCopies,           // disjoint_copies needs copies >= 1
    MemberOutOfRange,     // vertex set does not fit the graph it is used with
    TooLarge,             // instance exceeds an exact-solver guard (see force)
    AllIsolated,          // operation needs at least one non-isolated vertex
    ParameterOutOfRange,  // numeric parameter outside its documented range
    NotBipartite,         // side assignment does not partition the vertices
    EdgeWithinSide,       // an edge fails to cross the side assignment
    BudgetExceeded,       // enumeration would exceed the configured budget
    ParseError,           // malformed input text
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace wod
