#pragma once

#include <stdexcept>
#include <string>

namespace skypath {

/// Invalid parameters or inconsistent inputs (bad config, even kappa, empty sets).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Grid index outside 1..D.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Point outside the region, coincident points and similar geometric misuse.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or truncated input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace skypath
