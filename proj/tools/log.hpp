#ifndef SPNI_TOOLS_LOG_HPP
#define SPNI_TOOLS_LOG_HPP

#include <cstdlib>
#include <memory>
#include <ostream>
#include <string_view>

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

namespace spni::cli {

// INTERDICT_LOG: error | warn | info | debug, or 0..3. Default warn.
inline spdlog::level::level_enum log_level_from_env() {
  const char* raw = std::getenv("INTERDICT_LOG");
  if (!raw)
    return spdlog::level::warn;
  const std::string_view v(raw);
  if (v == "error" || v == "0")
    return spdlog::level::err;
  if (v == "info" || v == "2")
    return spdlog::level::info;
  if (v == "debug" || v == "3")
    return spdlog::level::debug;
  return spdlog::level::warn;
}

/// Logger writing "[level] message" lines to `sink`.
inline std::shared_ptr<spdlog::logger> make_logger(std::ostream& sink) {
  auto logger = std::make_shared<spdlog::logger>(
      "spni", std::make_shared<spdlog::sinks::ostream_sink_mt>(sink, true));
  logger->set_pattern("[%l] %v");
  logger->set_level(log_level_from_env());
  return logger;
}

} // namespace spni::cli

#endif // SPNI_TOOLS_LOG_HPP
