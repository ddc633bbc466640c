#pragma once

#include <stdexcept>
#include <string>

namespace qalign {

// Error taxonomy used throughout the library.  Input validation failures
// derive from std::invalid_argument; internal consistency failures (two
// independent computation routes disagreeing) derive from std::runtime_error
// so callers can tell user error from library bug.

class invalid_input_error : public std::invalid_argument {
public:
    explicit invalid_input_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class invalid_state_error : public std::invalid_argument {
public:
    explicit invalid_state_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class invalid_purification_error : public std::invalid_argument {
public:
    explicit invalid_purification_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class invalid_parameter_error : public std::invalid_argument {
public:
    explicit invalid_parameter_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class invalid_kraus_error : public std::invalid_argument {
public:
    explicit invalid_kraus_error(const std::string& what)
        : std::invalid_argument(what) {}
};

class channel_validity_error : public std::runtime_error {
public:
    explicit channel_validity_error(const std::string& what)
        : std::runtime_error(what) {}
};

class consistency_error : public std::runtime_error {
public:
    explicit consistency_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace qalign
