#include "qbank/file_io.hpp"

#include "qbank/error.hpp"

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

namespace qbank {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, std::string_view data)
{
  fs::path dir = path.parent_path();
  if (dir.empty()) {
    dir = ".";
  }
  std::string tmp = (dir / ("." + path.filename().string() + ".tmp.XXXXXX")).string();
  int fd = ::mkstemp(tmp.data());
  if (fd < 0) {
    throw IoError(path.string(), std::strerror(errno));
  }

  auto fail = [&](int err) {
    ::close(fd);
    ::unlink(tmp.c_str());
    throw IoError(path.string(), std::strerror(err));
  };

  const char* p = data.data();
  std::size_t left = data.size();
  while (left > 0) {
    ssize_t n = ::write(fd, p, left);
    if (n < 0) {
      if (errno == EINTR) {
        continue;
      }
      fail(errno);
    }
    p += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0) {
    fail(errno);
  }
  // mkstemp creates 0600; match what a plain open would have produced.
  mode_t mask = ::umask(0);
  ::umask(mask);
  ::fchmod(fd, 0666 & ~mask);
  if (::close(fd) != 0) {
    int err = errno;
    ::unlink(tmp.c_str());
    throw IoError(path.string(), std::strerror(err));
  }
  if (::rename(tmp.c_str(), path.c_str()) != 0) {
    int err = errno;
    ::unlink(tmp.c_str());
    throw IoError(path.string(), std::strerror(err));
  }
}

std::string read_file(const fs::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError(path.string(), "cannot open for reading");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError(path.string(), "read failed");
  }
  return buffer.str();
}

fs::path backup_file(const fs::path& path)
{
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm local{};
  ::localtime_r(&now, &local);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%S", &local);

  fs::path backup = path.string() + "." + stamp + ".bak";
  for (int i = 1; fs::exists(backup); ++i) {
    backup = path.string() + "." + stamp + "-" + std::to_string(i) + ".bak";
  }
  std::error_code ec;
  fs::copy_file(path, backup, fs::copy_options::none, ec);
  if (ec) {
    throw IoError(backup.string(), ec.message());
  }
  return backup;
}

} // namespace qbank
