#pragma once

#include <stdexcept>
#include <string>

namespace dcsum {

// Error categories surfaced by the library. Input-shaped problems (bad
// corpus records, bad config values, malformed files) map to exit code 1
// in the CLI; io_error and anything unexpected map to exit code 2.
enum class errc {
    empty_note,
    missing_section,
    duplicate_section,
    section_order,
    invalid_combination,
    no_context,
    invalid_value,
    empty_counts,
    empty_pairs,
    invalid_k,
    vocab_mismatch,
    dimension_mismatch,
    shape_mismatch,
    missing_base_tensor,
    name_set_mismatch,
    corrupt_file,
    provider_unavailable,
    malformed_response,
    out_of_range_score,
    io_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace dcsum
