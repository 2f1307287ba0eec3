// Copyright (c) the uxperf authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>

#include "uxperf/corpus.hpp"
#include "uxperf/error.hpp"

namespace uxperf {

namespace {

bool is_executable_file(const std::filesystem::path& p) {
  std::error_code ec;
  const auto status = std::filesystem::status(p, ec);
  if (ec || !std::filesystem::is_regular_file(status)) return false;
  const auto perms = status.permissions();
  return (perms & (std::filesystem::perms::owner_exec | std::filesystem::perms::group_exec |
                   std::filesystem::perms::others_exec)) != std::filesystem::perms::none;
}

bool resolve_decoder(const std::string& decoder) {
  if (decoder.find('/') != std::string::npos) {
    return is_executable_file(decoder);
  }
  const char* path_env = std::getenv("PATH");
  if (path_env == nullptr) return false;
  std::istringstream paths(path_env);
  std::string entry;
  while (std::getline(paths, entry, ':')) {
    if (entry.empty()) continue;
    if (is_executable_file(std::filesystem::path(entry) / decoder)) return true;
  }
  return false;
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

std::string read_log_tail(const std::filesystem::path& log, std::size_t max_bytes = 400) {
  std::ifstream in(log, std::ios::binary);
  if (!in) return "";
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  if (s.size() > max_bytes) s = s.substr(s.size() - max_bytes);
  return s;
}

}  // namespace

std::string decoder_executable() {
  const char* env = std::getenv("UXPERF_DECODER");
  return (env != nullptr && *env != '\0') ? env : "ffmpeg";
}

std::filesystem::path decode_container(const std::filesystem::path& video_path,
                                       const std::filesystem::path& out_dir,
                                       const std::string& decoder) {
  if (!resolve_decoder(decoder)) {
    throw Error(Errc::DecoderUnavailable, "decoder \"" + decoder + "\" not found on PATH");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw Error(Errc::IoFailure, "cannot create " + out_dir.string() + ": " + ec.message());
  }

  const auto log_path = out_dir / "decode.log";
  const auto pattern = out_dir / "frame_%06d.pgm";
  // showinfo logs one "n:... pts_time:..." line per decoded frame; -vsync 0
  // keeps container timestamps instead of resampling to a constant rate.
  std::string cmd = shell_quote(decoder) + " -nostdin -hide_banner -i " +
                    shell_quote(video_path.string()) +
                    " -map 0:v:0 -vsync 0 -pix_fmt gray -vf showinfo -start_number 0 -f image2 " +
                    shell_quote(pattern.string()) + " 2> " + shell_quote(log_path.string());
  const int status = std::system(cmd.c_str());
  const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  if (exit_code != 0) {
    throw Error(Errc::DecodeFailed, "decoder exited with status " + std::to_string(exit_code) +
                                        " for " + video_path.string() + "\n" +
                                        read_log_tail(log_path));
  }

  // Parse the frame-timestamp log into (frame ordinal -> pts seconds).
  std::map<long, double> pts_by_frame;
  {
    std::ifstream log(log_path);
    if (!log) {
      throw Error(Errc::DecodeFailed, "decoder produced no log at " + log_path.string());
    }
    static const std::regex info_re(R"(n:\s*(\d+).*pts_time:\s*([0-9.eE+-]+))");
    std::string line;
    std::smatch m;
    while (std::getline(log, line)) {
      if (std::regex_search(line, m, info_re)) {
        pts_by_frame[std::stol(m[1].str())] = std::stod(m[2].str());
      }
    }
  }
  if (pts_by_frame.empty()) {
    throw Error(Errc::DecodeFailed, "decoder emitted no frames for " + video_path.string());
  }

  std::size_t n_files = 0;
  char name[32];
  for (std::size_t i = 0;; ++i) {
    std::snprintf(name, sizeof(name), "frame_%06zu.pgm", i);
    if (!std::filesystem::exists(out_dir / name)) break;
    ++n_files;
  }
  if (n_files != pts_by_frame.size() ||
      pts_by_frame.begin()->first != 0 ||
      pts_by_frame.rbegin()->first != static_cast<long>(n_files) - 1) {
    throw Error(Errc::DecodeFailed,
                "frame/timestamp mismatch: " + std::to_string(n_files) + " image(s), " +
                    std::to_string(pts_by_frame.size()) + " log entries");
  }

  std::ofstream manifest(out_dir / "manifest.txt", std::ios::trunc);
  if (!manifest) {
    throw Error(Errc::IoFailure, "cannot write manifest in " + out_dir.string());
  }
  char buf[64];
  for (const auto& [frame, pts_s] : pts_by_frame) {
    std::snprintf(buf, sizeof(buf), "%ld %.6f\n", frame, pts_s * 1000.0);
    manifest << buf;
  }
  return out_dir;
}

}  // namespace uxperf
