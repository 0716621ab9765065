// Copyright 2026 The TYPIC Toolkit Authors.
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

#include "typic/http_api.h"

#include "httplib.h"
#include "typic/error.h"

namespace typic {
namespace {

using nlohmann::json;

void Reply(httplib::Response &res, int status, const json &body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void ReplyError(httplib::Response &res, ErrorCode code,
                const std::string &message) {
  Reply(res, HttpStatus(code),
        {{"error", {{"code", ErrorCodeName(code)}, {"message", message}}}});
}

std::string BearerToken(const httplib::Request &req) {
  std::string header = req.get_header_value("Authorization");
  const std::string prefix = "Bearer ";
  if (header.compare(0, prefix.size(), prefix) != 0) return "";
  return header.substr(prefix.size());
}

json ParseBody(const httplib::Request &req) {
  try {
    return json::parse(req.body);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kSchemaError, std::string("body: ") + e.what());
  }
}

}  // namespace

int HttpStatus(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnauthorized:
      return 401;
    case ErrorCode::kUnknownProject:
    case ErrorCode::kUnknownItem:
    case ErrorCode::kUnknownAnnotator:
    case ErrorCode::kUnknownTemplate:
      return 404;
    case ErrorCode::kRevisionConflict:
      return 409;
    case ErrorCode::kIoError:
      return 500;
    default:
      return 400;
  }
}

HttpApi::HttpApi(AnnotationService &service, json default_templates,
                 std::string admin_token)
    : service_(service),
      default_templates_(std::move(default_templates)),
      admin_token_(std::move(admin_token)),
      server_(std::make_unique<httplib::Server>()) {
  Routes();
}

HttpApi::~HttpApi() { Stop(); }

bool HttpApi::Listen(const std::string &host, int port) {
  return server_->listen(host, port);
}

int HttpApi::BindToAnyPort(const std::string &host) {
  return server_->bind_to_any_port(host);
}

bool HttpApi::ListenAfterBind() { return server_->listen_after_bind(); }

void HttpApi::Stop() {
  if (server_) server_->stop();
}

void HttpApi::Routes() {
  using Handler =
      std::function<void(const httplib::Request &, httplib::Response &)>;
  auto guarded = [](Handler handler) {
    return [handler](const httplib::Request &req, httplib::Response &res) {
      try {
        handler(req, res);
      } catch (const Error &e) {
        ReplyError(res, e.code(), e.what());
      } catch (const std::exception &e) {
        ReplyError(res, ErrorCode::kIoError, e.what());
      }
    };
  };
  auto require_admin = [this](const httplib::Request &req) {
    if (!admin_token_.empty() && BearerToken(req) != admin_token_) {
      throw Error(ErrorCode::kUnauthorized, "admin token required");
    }
  };
  httplib::Server &s = *server_;

  s.Get("/api/v1/templates",
        guarded([this](const httplib::Request &, httplib::Response &res) {
          Reply(res, 200, default_templates_);
        }));
  s.Get("/api/v1/schemas",
        guarded([](const httplib::Request &, httplib::Response &res) {
          Reply(res, 200, PayloadSchemas());
        }));
  s.Get("/api/v1/projects",
        guarded([this, require_admin](const httplib::Request &req,
                                      httplib::Response &res) {
          require_admin(req);
          Reply(res, 200, service_.ListProjects());
        }));
  s.Post("/api/v1/projects",
         guarded([this, require_admin](const httplib::Request &req,
                                       httplib::Response &res) {
           require_admin(req);
           Reply(res, 201, service_.CreateProject(ParseBody(req)));
         }));
  s.Get(R"(/api/v1/projects/([^/]+))",
        guarded([this, require_admin](const httplib::Request &req,
                                      httplib::Response &res) {
          require_admin(req);
          Reply(res, 200, service_.GetProject(req.matches[1]));
        }));
  s.Delete(R"(/api/v1/projects/([^/]+))",
           guarded([this, require_admin](const httplib::Request &req,
                                         httplib::Response &res) {
             require_admin(req);
             service_.DeleteProject(req.matches[1]);
             Reply(res, 200, {{"deleted", std::string(req.matches[1])}});
           }));
  s.Get(R"(/api/v1/projects/([^/]+)/templates)",
        guarded([this](const httplib::Request &req, httplib::Response &res) {
          Reply(res, 200, service_.Templates(req.matches[1]));
        }));
  s.Get(R"(/api/v1/projects/([^/]+)/next-task)",
        guarded([this](const httplib::Request &req, httplib::Response &res) {
          std::string project = req.matches[1];
          std::string annotator =
              service_.Authenticate(project, BearerToken(req));
          json task = service_.NextTask(project, annotator);
          if (task.is_null()) {
            res.status = 204;
          } else {
            Reply(res, 200, task);
          }
        }));
  s.Post(R"(/api/v1/projects/([^/]+)/submit)",
         guarded([this](const httplib::Request &req, httplib::Response &res) {
           std::string project = req.matches[1];
           std::string annotator =
               service_.Authenticate(project, BearerToken(req));
           json body = ParseBody(req);
           if (!body.is_object() || !body.contains("item_id") ||
               !body.contains("revision") || !body.contains("payload") ||
               !body["item_id"].is_string() ||
               !body["revision"].is_number_integer()) {
             throw Error(ErrorCode::kValidationError,
                         "submit body needs item_id, revision and payload");
           }
           Reply(res, 200,
                 service_.Submit(project, annotator,
                                 body["item_id"].get<std::string>(),
                                 body["payload"],
                                 body["revision"].get<int64_t>()));
         }));
  s.Get(R"(/api/v1/projects/([^/]+)/export)",
        guarded([this, require_admin](const httplib::Request &req,
                                      httplib::Response &res) {
          require_admin(req);
          json files = service_.ExportFiles(req.matches[1]);
          Reply(res, 200, {{"files", files}});
        }));
}

}  // namespace typic
