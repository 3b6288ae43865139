#pragma once

#include <stdexcept>

namespace qrep {

// Bad argument values: zero orders, non-units, malformed tables.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A caller broke a documented precondition (non-Hermitian input, reducible
// component handed to the labeler, ...).
class contract_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class labeling_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qrep
