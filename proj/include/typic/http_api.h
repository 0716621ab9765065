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

#ifndef TYPIC_HTTP_API_H_
#define TYPIC_HTTP_API_H_

#include <memory>
#include <string>

#include "typic/service.h"

namespace httplib {
class Server;
}

namespace typic {

// JSON-over-HTTP front end of an AnnotationService, rooted at /api/v1.
//
//   GET    /api/v1/templates                  default template set
//   GET    /api/v1/schemas                    submission payload schemas
//   GET    /api/v1/projects                   project summaries      (admin)
//   POST   /api/v1/projects                   create from config     (admin)
//   GET    /api/v1/projects/{id}              project summary        (admin)
//   DELETE /api/v1/projects/{id}              delete project         (admin)
//   GET    /api/v1/projects/{id}/templates    project template set
//   GET    /api/v1/projects/{id}/next-task    next task, 204 if none (annotator)
//   POST   /api/v1/projects/{id}/submit       {item_id, revision, payload}
//   GET    /api/v1/projects/{id}/export       {files: {name: content}} (admin)
//
// Annotator routes take "Authorization: Bearer <token>". Admin routes need
// the admin token when one is configured. Errors are
// {"error": {"code": ..., "message": ...}}.
class HttpApi {
 public:
  HttpApi(AnnotationService &service, nlohmann::json default_templates,
          std::string admin_token = "");
  ~HttpApi();

  // Binds and serves until Stop(). Returns false when binding fails.
  bool Listen(const std::string &host, int port);
  // Binds to a free port and returns it, or -1; then call ListenAfterBind.
  int BindToAnyPort(const std::string &host);
  bool ListenAfterBind();
  void Stop();

 private:
  void Routes();

  AnnotationService &service_;
  nlohmann::json default_templates_;
  std::string admin_token_;
  std::unique_ptr<httplib::Server> server_;
};

// HTTP status for an error code.
int HttpStatus(ErrorCode code);

}  // namespace typic

#endif  // TYPIC_HTTP_API_H_
