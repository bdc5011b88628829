#ifndef HOPFIND_ERRORS_HPP
#define HOPFIND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfind {

// Error taxonomy shared by all modules.  The CLI maps these onto its
// exit-code contract: 0 success, 2 invariant violation, 3 resource guard,
// 4 input error.

// Bad arguments, malformed descriptors, violated preconditions.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured cap or guard was exceeded (term counts, caps, precision).
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical invariant failed; either corrupted data or a bug.
class invariant_error : public std::runtime_error {
public:
  explicit invariant_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation not available for this provenance / representation.
class unsupported_error : public std::runtime_error {
public:
  explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual / JSON input.
class parse_error : public std::runtime_error {
public:
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const invariant_error*>(&e)) return 2;
  if (dynamic_cast<const resource_error*>(&e)) return 3;
  return 4;
}

} // namespace hopfind

#endif
