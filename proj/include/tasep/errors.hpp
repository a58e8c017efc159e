#pragma once

#include <stdexcept>

namespace tasep {

// Thrown when an exhaustive computation is requested beyond its guard size.
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tasep
