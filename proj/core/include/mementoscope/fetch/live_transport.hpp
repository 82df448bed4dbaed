#pragma once

#include "mementoscope/fetch/http.hpp"

namespace mementoscope {

// Real network transport over cpp-httplib (HTTP and HTTPS). Header order
// follows the library's case-insensitive name ordering, not wire order.
class LiveTransport final : public HttpTransport {
 public:
  Exchange send(const HttpRequest& request) override;
};

}  // namespace mementoscope
