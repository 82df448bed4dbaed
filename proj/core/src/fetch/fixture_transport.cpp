#include "mementoscope/fetch/fixture_transport.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mementoscope/error.hpp"
#include "mementoscope/url.hpp"

namespace mementoscope {
namespace {

// Splits off one line, accepting LF or CRLF. Returns false at end of input.
bool next_line(std::string_view& rest, std::string_view& line) {
  if (rest.empty()) return false;
  const auto nl = rest.find('\n');
  line = rest.substr(0, nl);
  rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return true;
}

std::string normalize_key_url(std::string_view url) {
  const auto parsed = parse_url(url);
  return parsed ? parsed->without_fragment() : std::string(url);
}

[[noreturn]] void malformed(const std::string& source, const std::string& why) {
  throw Error(ErrorCode::kMalformedFixture, (source.empty() ? "<fixture>" : source) + ": " + why);
}

}  // namespace

Fixture parse_fixture(std::string_view text, std::string source) {
  Fixture f;
  f.source = source;
  std::string_view rest = text;
  std::string_view line;

  do {
    if (!next_line(rest, line)) malformed(source, "missing request line");
  } while (line.empty() || line.front() == '#');

  const auto sp = line.find(' ');
  if (sp == std::string_view::npos) malformed(source, "request line needs METHOD URL");
  f.method = std::string(line.substr(0, sp));
  f.url = std::string(line.substr(sp + 1));

  if (!next_line(rest, line)) malformed(source, "missing status line");
  if (line.substr(0, 6) == "ERROR ") {
    std::string_view tail = line.substr(6);
    const auto space = tail.find(' ');
    const auto name = tail.substr(0, space);
    const auto error = fetch_error_from_name(name);
    if (!error) malformed(source, "unknown error tag '" + std::string(name) + "'");
    f.exchange = Exchange::fail(
        *error, space == std::string_view::npos ? std::string(name)
                                                : std::string(tail.substr(space + 1)));
    return f;
  }
  if (line.substr(0, 5) != "HTTP/") malformed(source, "bad status line '" + std::string(line) + "'");
  HttpResponse response;
  {
    const auto first = line.find(' ');
    if (first == std::string_view::npos) malformed(source, "status line without code");
    std::string_view after = line.substr(first + 1);
    const auto second = after.find(' ');
    const auto code = after.substr(0, second);
    if (code.size() != 3 || !std::all_of(code.begin(), code.end(), ::isdigit)) {
      malformed(source, "bad status code '" + std::string(code) + "'");
    }
    response.status = std::stoi(std::string(code));
    if (second != std::string_view::npos) response.reason = std::string(after.substr(second + 1));
  }
  while (next_line(rest, line) && !line.empty()) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) malformed(source, "bad header '" + std::string(line) + "'");
    std::string_view value = line.substr(colon + 1);
    while (!value.empty() && (value.front() == ' ' || value.front() == '\t')) value.remove_prefix(1);
    response.headers.emplace_back(std::string(line.substr(0, colon)), std::string(value));
  }
  response.body = std::string(rest);
  f.exchange = Exchange::ok(std::move(response));
  return f;
}

std::string serialize_fixture(const Fixture& f) {
  std::ostringstream out;
  out << f.method << ' ' << f.url << '\n';
  if (f.exchange.error) {
    out << "ERROR " << fetch_error_name(*f.exchange.error);
    if (!f.exchange.message.empty()) out << ' ' << f.exchange.message;
    out << '\n';
    return out.str();
  }
  const auto& r = *f.exchange.response;
  out << "HTTP/1.1 " << r.status;
  if (!r.reason.empty()) out << ' ' << r.reason;
  out << '\n';
  for (const auto& [k, v] : r.headers) out << k << ": " << v << '\n';
  out << '\n' << r.body;
  return out.str();
}

void FixtureTransport::load_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error(ErrorCode::kIoError, "fixture directory '" + dir.string() + "' not found");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".http") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    add(parse_fixture(buf.str(), path.string()));
  }
}

void FixtureTransport::add(Fixture f) {
  auto key = std::make_pair(f.method, normalize_key_url(f.url));
  fixtures_.insert_or_assign(std::move(key), std::move(f));
}

void FixtureTransport::add_response(std::string method, std::string url, int status,
                                    HeaderList headers, std::string body) {
  HttpResponse r;
  r.status = status;
  r.headers = std::move(headers);
  r.body = std::move(body);
  add(Fixture{std::move(method), std::move(url), Exchange::ok(std::move(r)), {}});
}

void FixtureTransport::add_failure(std::string method, std::string url, FetchError error) {
  add(Fixture{std::move(method), std::move(url), Exchange::fail(error, "recorded failure"), {}});
}

const Fixture* FixtureTransport::find(std::string_view method, std::string_view url) const {
  const std::string key_url = normalize_key_url(url);
  if (auto it = fixtures_.find({std::string(method), key_url}); it != fixtures_.end()) {
    return &it->second;
  }
  if (method == "HEAD") {
    if (auto it = fixtures_.find({"GET", key_url}); it != fixtures_.end()) return &it->second;
  }
  return nullptr;
}

Exchange FixtureTransport::send(const HttpRequest& request) {
  {
    std::lock_guard lock(log_mutex_);
    log_.push_back(request);
  }
  const Fixture* f = find(request.method, request.url);
  if (!f) {
    return Exchange::fail(FetchError::kNetworkError,
                          "no recorded exchange for " + request.method + " " + request.url);
  }
  Exchange out = f->exchange;
  if (request.method == "HEAD" && out.response) out.response->body.clear();
  return out;
}

std::vector<HttpRequest> FixtureTransport::requests() const {
  std::lock_guard lock(log_mutex_);
  return log_;
}

}  // namespace mementoscope
