#pragma once

#include <stdexcept>
#include <string>

namespace tailpred {

// Error categories, mirrored one-to-one by the C API status codes.
enum class errc {
  invalid_argument,
  non_positive_value,
  quantile_below_threshold,
  insufficient_tail,
  degenerate_sample,
  degenerate_partition,
  insufficient_data,
  infeasible_channel,
  domain_error,
  io_error,
  parse_error,
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tailpred
