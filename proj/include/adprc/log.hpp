#pragma once

namespace adprc {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

// Level comes from the HJBR_LOG environment variable (quiet|info|debug),
// read once on first use. Unset defaults to info.
LogLevel log_level();

void log_info(const char* fmt, ...);
void log_debug(const char* fmt, ...);

}  // namespace adprc
