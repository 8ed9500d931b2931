#pragma once

#include <stdexcept>
#include <string>

namespace edgemarket {

// Error categories mapped to CLI exit codes:
//   ConfigError -> 1, IoError -> 2, NumericalError -> 3.

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgemarket
