#include "f2fix/cli.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "f2fix/engine.hpp"
#include "f2fix/twisted.hpp"

namespace f2fix::cli {

  using json = nlohmann::ordered_json;

  namespace {
    struct InputError : std::invalid_argument {
      using std::invalid_argument::invalid_argument;
    };

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    json word_list(std::vector<Word> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(to_string(w));
      }
      return out;
    }

    json class_list(std::vector<CyclicWord> const& cs) {
      json out = json::array();
      for (auto const& c : cs) {
        out.push_back(to_string(c.rep()));
      }
      return out;
    }

    json endo_json(Endomorphism const& psi) {
      return {{"a", to_string(psi.image_a)}, {"b", to_string(psi.image_b)}};
    }

    json mofix_json(MOFixReport const& m) {
      json out{{"classes", class_list(m.classes)},
               {"status", m.status == MOFixStatus::Complete ? "complete" : "inconclusive"}};
      if (m.witness) {
        out["witness"] = {{"p", m.witness->p},
                          {"q", m.witness->q},
                          {"x", to_string(m.witness->x)},
                          {"g", to_string(m.witness->g)}};
      }
      return out;
    }

    json fix_json(FixResult const& r) {
      json out{{"classification", to_string(r.kind)},
               {"status", to_string(r.status)},
               {"basis", word_list(r.basis)}};
      if (r.mofix) {
        out["mofix"] = mofix_json(*r.mofix);
      }
      if (r.conjugator) {
        out["conjugator"] = {{"W", to_string(r.conjugator->W)}, {"k", r.conjugator->k}};
      }
      return out;
    }

    Endomorphism need_endo(Request const& req) {
      if (!req.endo) {
        throw InputError(req.command + " needs --endo");
      }
      return parse_endo(*req.endo);
    }

    Word need_word(std::optional<std::string> const& text, char const* flag,
                   std::string const& command) {
      if (!text) {
        throw InputError(command + " needs " + flag);
      }
      return parse_word(*text);
    }

    // Flatten one level of objects into "key.sub: value" lines.
    void text_lines(std::ostringstream& os, std::string const& prefix, json const& j) {
      for (auto const& [key, value] : j.items()) {
        std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
          text_lines(os, name, value);
          continue;
        }
        os << name << ": ";
        if (value.is_array()) {
          os << '[';
          for (std::size_t i = 0; i < value.size(); ++i) {
            os << (i ? ", " : "")
               << (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
          }
          os << ']';
        } else if (value.is_string()) {
          os << value.get<std::string>();
        } else {
          os << value.dump();
        }
        os << '\n';
      }
    }

    int exit_for(std::string_view status) {
      return status == "inconclusive" ? exit_inconclusive : exit_ok;
    }

    json dispatch(Request const& req, int& code) {
      json         out{{"command", req.command}};
      auto const&  cmd = req.command;
      if (cmd == "classify") {
        auto psi = need_endo(req);
        out["input"]          = endo_json(psi);
        out["classification"] = to_string(classify_endo(psi));
      } else if (cmd == "fix" || cmd == "stable-image") {
        auto psi = need_endo(req);
        out["input"] = endo_json(psi);
        auto r = cmd == "fix" ? fix(psi, req.budget) : stable_image(psi, req.budget);
        out.update(fix_json(r));
        code = exit_for(to_string(r.status));
      } else if (cmd == "mofix") {
        auto psi = need_endo(req);
        out["input"] = endo_json(psi);
        auto m = mofix(psi, req.budget);
        out.update(mofix_json(m));
        code = m.status == MOFixStatus::Inconclusive ? exit_inconclusive : exit_ok;
      } else if (cmd == "twisted") {
        Word P = need_word(req.word, "--word", cmd);
        Word Z = need_word(req.z, "--z", cmd);
        if (!req.k) {
          throw InputError("twisted needs --k");
        }
        out["input"] = {{"P", to_string(P)}, {"Z", to_string(Z)}, {"k", *req.k}};
        try {
          auto W        = solve_twisted(P, Z, *req.k);
          out["status"] = "complete";
          out["W"]      = W ? json(to_string(*W)) : json(nullptr);
        } catch (SearchExhausted const&) {
          out["status"] = "inconclusive";
          code          = exit_inconclusive;
        }
      } else if (cmd == "solve-conjugator") {
        Word P = need_word(req.word, "--word", cmd);
        Word Z = need_word(req.z, "--z", cmd);
        out["input"] = {{"P", to_string(P)}, {"Z", to_string(Z)}};
        try {
          auto sol      = solve_conjugator_equation(P, Z);
          out["status"] = "complete";
          out["solution"] =
              sol ? json{{"W", to_string(sol->W)}, {"k", sol->k}} : json(nullptr);
        } catch (SearchExhausted const&) {
          out["status"] = "inconclusive";
          code          = exit_inconclusive;
        }
      } else if (cmd == "oracle-fix") {
        auto psi = need_endo(req);
        out["input"]   = endo_json(psi);
        out["max_len"] = req.oracle_len;
        out["fixed"]   = word_list(brute_fix_oracle(psi, req.oracle_len));
      } else if (cmd == "oracle-mofix") {
        auto psi = need_endo(req);
        out["input"]   = endo_json(psi);
        out["max_len"] = req.oracle_len;
        out["classes"] = class_list(brute_mofix_oracle(psi, req.oracle_len));
      } else {
        throw InputError("unknown command '" + cmd + "'");
      }
      return out;
    }
  }  // namespace

  Endomorphism parse_endo(std::string_view text) {
    std::optional<Word> images[2];
    std::size_t         start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::size_t i = start;
      while (i < end && is_space(text[i])) {
        ++i;
      }
      if (i == end || (text[i] != 'a' && text[i] != 'b')) {
        throw ParseError("expected 'a->' or 'b->'", i);
      }
      int g = text[i] == 'a' ? 0 : 1;
      ++i;
      while (i < end && is_space(text[i])) {
        ++i;
      }
      if (text.substr(i, 2) != "->") {
        throw ParseError("expected '->'", i);
      }
      i += 2;
      if (images[g]) {
        throw ParseError(std::string("duplicate image of ") + (g ? "b" : "a"), start);
      }
      std::string_view body = text.substr(i, end - i);
      if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw ParseError("empty image (write 1 for the identity)", i);
      }
      try {
        images[g] = parse_word(body);
      } catch (ParseError const& e) {
        std::string what = e.what();
        throw ParseError(what.substr(0, what.rfind(" at position ")), i + e.position());
      }
      start = end + 1;
    }
    if (!images[0] || !images[1]) {
      throw ParseError("both a and b need an image", text.size());
    }
    return {*images[0], *images[1]};
  }

  Response run(Request const& req) {
    auto     t0 = std::chrono::steady_clock::now();
    Response resp;
    json     out;
    try {
      out = dispatch(req, resp.exit_code);
    } catch (std::invalid_argument const& e) {
      out            = json{{"command", req.command}, {"error", e.what()}};
      resp.exit_code = exit_input_error;
    }
    auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - t0);
    out["elapsed_ms"] = static_cast<std::int64_t>(elapsed.count());
    if (req.format == Format::Json) {
      resp.output = out.dump(2) + "\n";
    } else {
      std::ostringstream os;
      text_lines(os, "", out);
      resp.output = os.str();
    }
    return resp;
  }

}  // namespace f2fix::cli
