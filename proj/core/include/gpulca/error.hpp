#pragma once

#include <stdexcept>
#include <string>

namespace gpulca {

/// All domain and loader failures surface as this exception. Loaders prefix
/// messages with the document path of the offending node.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gpulca
