#pragma once

#include <stdexcept>
#include <string>

namespace annctl {

/// A config file, CLI argument or domain value violates an invariant.
/// The message names the offending field path (e.g. "plant.l_armature").
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An integration step or a training run produced a non-finite value.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure: unwritable output directory, unreadable model file.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace annctl
