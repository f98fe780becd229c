#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace adl {

/// Process-wide supply of fresh variable names.
///
/// Fresh names have the form `base#n`. User identifiers may also contain
/// `#n` suffixes (rendered macro output must re-parse), so the parser calls
/// observe() on every identifier it reads; the counter only moves forward.
namespace fresh {

std::string name(std::string_view base);

/// Strips a trailing `#n` suffix, if present.
std::string_view base_of(std::string_view name);

/// Ensures future names never reuse the numeric suffix of `name`.
void observe(std::string_view name);

/// Restarts the counter; used at the start of a CLI run so output is
/// reproducible. Not safe while other threads draw names.
void reset();

std::uint64_t peek();

}  // namespace fresh
}  // namespace adl
