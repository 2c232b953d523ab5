#pragma once

#include <stdexcept>
#include <string>

namespace zipfseq {

/// Error thrown on contract violations (bad inputs, malformed files,
/// unreachable search targets). Carries a human-readable message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace zipfseq
