// report.cpp

#include "abcv/report.hpp"

#include <json.hpp>

#include <sstream>

namespace abcv {

using nlohmann::json;

const char* status_name(Status s) {
  switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    default: return "UNDECIDED";
  }
}

Status status_from_tri(Tri t) {
  if (t == Tri::yes) return Status::PASS;
  if (t == Tri::no) return Status::FAIL;
  return Status::UNDECIDED;
}

Margin Margin::of(const VReal& v, int digits) {
  Margin m;
  m.midpoint = v.mid_str(digits);
  m.radius = v.rad_str(3);
  m.midpoint_d = v.mid_d();
  return m;
}

void VerificationReport::add(Assertion a) {
  assertions.push_back(std::move(a));
  recompute_status();
}

void VerificationReport::add(const std::string& label, Status st) {
  add(Assertion{label, st, std::nullopt, {}, {}});
}

void VerificationReport::add(const std::string& label, Status st, const VReal& margin) {
  add(Assertion{label, st, Margin::of(margin), {}, {}});
}

void VerificationReport::add(const std::string& label, Status st, const VReal& margin,
                             std::vector<mpz_class> witness) {
  add(Assertion{label, st, Margin::of(margin), witness_strings(witness), {}});
}

void VerificationReport::add_note(const std::string& label, Status st,
                                  const std::string& note) {
  add(Assertion{label, st, std::nullopt, {}, note});
}

void VerificationReport::recompute_status() {
  bool any_fail = false, any_und = false;
  for (const auto& a : assertions) {
    if (a.status == Status::FAIL) any_fail = true;
    if (a.status == Status::UNDECIDED) any_und = true;
  }
  status = any_fail ? Status::FAIL : (any_und ? Status::UNDECIDED : Status::PASS);
}

std::size_t VerificationReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& a : assertions)
    if (a.status == s) ++n;
  return n;
}

const Assertion* VerificationReport::find(const std::string& label) const {
  for (const auto& a : assertions)
    if (a.label == label) return &a;
  return nullptr;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "[" << status_name(status) << "] " << check_name;
  if (!provenance.empty()) os << "  (" << provenance << ")";
  os << "  " << elapsed_seconds << "s\n";
  for (const auto& a : assertions) {
    os << "  " << status_name(a.status) << "  " << a.label;
    if (a.margin) os << "  margin=" << a.margin->midpoint << " +- " << a.margin->radius;
    if (!a.witness.empty()) {
      os << "  witness=[";
      for (std::size_t i = 0; i < a.witness.size(); ++i)
        os << (i ? "," : "") << a.witness[i];
      os << "]";
    }
    if (!a.note.empty()) os << "  # " << a.note;
    os << "\n";
  }
  return os.str();
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "check_name,label,status,margin_midpoint,margin_radius,witness,note\n";
  for (const auto& a : assertions) {
    os << check_name << "," << a.label << "," << status_name(a.status) << ",";
    if (a.margin) os << a.margin->midpoint << "," << a.margin->radius;
    else os << ",";
    os << ",\"";
    for (std::size_t i = 0; i < a.witness.size(); ++i)
      os << (i ? ";" : "") << a.witness[i];
    os << "\",\"" << a.note << "\"\n";
  }
  return os.str();
}

namespace {
json report_to_json(const VerificationReport& r) {
  json j;
  j["check_name"] = r.check_name;
  j["status"] = status_name(r.status);
  j["provenance"] = r.provenance;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["assertions"] = json::array();
  for (const auto& a : r.assertions) {
    json ja;
    ja["label"] = a.label;
    ja["status"] = status_name(a.status);
    if (a.margin) {
      ja["margin"] = {{"midpoint", a.margin->midpoint}, {"radius", a.margin->radius}};
    }
    ja["witness"] = a.witness;
    if (!a.note.empty()) ja["note"] = a.note;
    j["assertions"].push_back(ja);
  }
  return j;
}
}  // namespace

std::string VerificationReport::to_json_string(int indent) const {
  return report_to_json(*this).dump(indent);
}

std::vector<std::string> witness_strings(const std::vector<mpz_class>& w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (const auto& z : w) out.push_back(z.get_str());
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& rs, int indent) {
  json arr = json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr.dump(indent);
}

}  // namespace abcv
