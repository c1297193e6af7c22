#pragma once

#include <stdexcept>
#include <string>

namespace mdr {

// Error with a machine-readable code; the CLI maps codes into JSON output.
class mdr_error : public std::runtime_error {
public:
    mdr_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace mdr
