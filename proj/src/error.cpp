#include "cubelab/error.hpp"

#include <utility>

namespace cubelab {

InvalidArgument::InvalidArgument(std::string field, const std::string& message)
    : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

}  // namespace cubelab
