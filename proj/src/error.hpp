#pragma once

#include <stdexcept>
#include <string>

namespace wildtree {

enum class Status {
    Ok = 0,
    InvalidArgument,
    Parse,
    Io,
    Limit,
    Precondition,
    Checksum,
    Verify,
};

class Error : public std::runtime_error {
public:
    Error(Status status, std::string message) : std::runtime_error(std::move(message)), status_(status) {}
    Status status() const { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status status, std::string message) { throw Error(status, std::move(message)); }

}  // namespace wildtree
