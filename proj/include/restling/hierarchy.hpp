#pragma once

// Containment relation between resource names ("university" contains
// "faculty"), closed transitively. Pairs are lemmas, general first.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "restling/errors.hpp"

namespace restling {

namespace detail {

inline constexpr std::pair<std::string_view, std::string_view> kContainment[] = {
    // academia
    {"university", "faculty"}, {"university", "college"}, {"university", "campus"},
    {"university", "department"}, {"university", "student"}, {"university", "library"},
    {"college", "department"}, {"college", "course"}, {"faculty", "department"},
    {"faculty", "professor"}, {"faculty", "lecturer"}, {"faculty", "researcher"},
    {"department", "professor"}, {"department", "course"}, {"department", "lecturer"},
    {"campus", "building"}, {"course", "lecture"}, {"course", "assignment"}, {"course", "exam"},
    {"course", "module"}, {"class", "student"}, {"school", "class"}, {"school", "teacher"},
    {"school", "student"}, {"library", "book"}, {"book", "chapter"}, {"chapter", "section"},
    {"section", "paragraph"},
    // sport
    {"league", "team"}, {"league", "season"}, {"league", "division"}, {"division", "team"},
    {"season", "match"}, {"season", "game"}, {"tournament", "match"}, {"tournament", "round"},
    {"round", "match"}, {"team", "player"}, {"team", "coach"}, {"team", "roster"},
    {"roster", "player"}, {"club", "team"}, {"club", "member"}, {"match", "goal"},
    {"game", "score"}, {"stadium", "seat"},
    // organisation
    {"organization", "department"}, {"organization", "team"}, {"organization", "member"},
    {"organization", "project"}, {"organization", "user"}, {"organisation", "team"},
    {"organisation", "user"}, {"company", "department"}, {"company", "employee"},
    {"company", "office"}, {"enterprise", "organization"},
    {"tenant", "organization"}, {"tenant", "user"}, {"account", "user"}, {"account", "profile"},
    {"account", "subscription"}, {"account", "invoice"}, {"account", "setting"},
    {"account", "key"}, {"account", "balance"}, {"workspace", "project"}, {"workspace", "channel"},
    {"project", "task"}, {"project", "issue"}, {"project", "milestone"}, {"project", "repository"},
    {"repository", "branch"}, {"repository", "commit"}, {"repository", "release"},
    {"repository", "tag"}, {"branch", "commit"}, {"issue", "comment"}, {"task", "subtask"},
    {"group", "member"}, {"group", "user"}, {"user", "role"}, {"user", "permission"},
    {"user", "token"}, {"user", "session"}, {"user", "preference"}, {"role", "permission"},
    {"employee", "payslip"}, {"office", "desk"}, {"office", "room"},
    // geography and buildings
    {"world", "continent"}, {"continent", "country"}, {"country", "region"}, {"country", "state"},
    {"country", "province"}, {"country", "city"}, {"region", "city"}, {"state", "county"},
    {"province", "city"}, {"county", "city"}, {"city", "district"}, {"city", "street"},
    {"city", "neighborhood"}, {"district", "street"}, {"street", "address"},
    {"site", "building"}, {"site", "facility"}, {"facility", "building"}, {"building", "floor"},
    {"building", "room"}, {"building", "apartment"}, {"floor", "room"}, {"floor", "zone"},
    {"apartment", "room"}, {"home", "room"}, {"house", "room"}, {"room", "sensor"},
    {"room", "light"}, {"room", "window"}, {"room", "door"}, {"location", "zone"},
    {"location", "sublocation"}, {"museum", "gallery"}, {"museum", "collection"},
    {"gallery", "artwork"}, {"gallery", "exhibit"}, {"park", "trail"}, {"campground", "campsite"},
    {"parking", "spot"}, {"garage", "spot"},
    // smart home and iot
    {"structure", "device"}, {"structure", "thermostat"}, {"structure", "camera"},
    {"structure", "zone"}, {"structure", "room"}, {"structure", "where"}, {"home", "device"},
    {"home", "zone"}, {"zone", "device"}, {"zone", "sensor"}, {"network", "device"},
    {"network", "gateway"}, {"network", "node"}, {"gateway", "device"}, {"gateway", "sensor"},
    {"hub", "device"}, {"hub", "sensor"}, {"bridge", "light"}, {"bridge", "sensor"},
    {"application", "device"}, {"application", "endpoint"}, {"application", "integration"},
    {"application", "webhook"}, {"application", "key"}, {"application", "version"},
    {"app", "device"}, {"app", "installation"}, {"fleet", "device"}, {"fleet", "vehicle"},
    {"device", "sensor"}, {"device", "actuator"},
    {"device", "channel"}, {"device", "attribute"}, {"device", "property"},
    {"device", "capability"}, {"device", "component"}, {"device", "firmware"},
    {"device", "interface"}, {"device", "port"}, {"device", "log"}, {"device", "alert"},
    {"device", "command"}, {"device", "reading"}, {"device", "telemetry"}, {"device", "setting"},
    {"device", "battery"}, {"devicetype", "device"}, {"thing", "property"}, {"thing", "action"},
    {"thing", "resource"}, {"thing", "sensor"}, {"thermostat", "schedule"},
    {"thermostat", "setpoint"}, {"thermostat", "mode"}, {"thermostat", "fan"},
    {"camera", "snapshot"}, {"camera", "stream"}, {"camera", "clip"}, {"camera", "recording"},
    {"camera", "event"}, {"sensor", "reading"}, {"sensor", "measurement"},
    {"sensor", "observation"}, {"sensor", "datastream"}, {"datastream", "datapoint"},
    {"datastream", "observation"}, {"feed", "datapoint"}, {"feed", "datastream"},
    {"channel", "feed"}, {"channel", "datapoint"}, {"channel", "message"},
    {"interface", "property"}, {"interface", "event"}, {"component", "attribute"},
    {"component", "capability"}, {"capability", "attribute"}, {"capability", "command"},
    {"lock", "code"}, {"vehicle", "trip"}, {"vehicle", "engine"},
    {"vehicle", "tire"}, {"trip", "waypoint"}, {"route", "waypoint"}, {"route", "stop"},
    {"meter", "reading"}, {"plant", "sensor"}, {"garden", "plant"}, {"farm", "field"},
    {"field", "plot"}, {"herd", "animal"}, {"rule", "condition"}, {"rule", "action"},
    {"scene", "action"}, {"automation", "trigger"}, {"automation", "action"},
    {"schedule", "event"}, {"schedule", "slot"}, {"firmware", "update"},
    // media and content
    {"media", "comment"}, {"media", "like"}, {"media", "tag"}, {"album", "photo"},
    {"album", "track"}, {"album", "image"}, {"artist", "album"}, {"artist", "track"},
    {"playlist", "track"}, {"playlist", "video"}, {"channel", "video"}, {"video", "comment"},
    {"video", "caption"}, {"photo", "comment"}, {"photo", "tag"}, {"post", "comment"},
    {"post", "reaction"}, {"blog", "post"}, {"blog", "article"}, {"site", "page"},
    {"website", "page"}, {"page", "section"}, {"article", "comment"}, {"thread", "message"},
    {"thread", "reply"}, {"forum", "thread"}, {"forum", "topic"}, {"topic", "post"},
    {"conversation", "message"}, {"mailbox", "message"}, {"mailbox", "folder"},
    {"folder", "file"}, {"folder", "document"}, {"drive", "folder"}, {"drive", "file"},
    {"bucket", "object"}, {"bucket", "file"}, {"storage", "bucket"}, {"directory", "file"},
    {"document", "page"}, {"document", "revision"}, {"document", "attachment"},
    {"message", "attachment"}, {"email", "attachment"}, {"calendar", "event"},
    {"event", "attendee"}, {"event", "ticket"}, {"event", "reminder"}, {"list", "item"},
    {"collection", "item"}, {"catalog", "product"}, {"catalog", "category"},
    {"category", "product"}, {"category", "subcategory"}, {"menu", "item"}, {"feed", "entry"},
    {"timeline", "tweet"}, {"tweet", "reply"}, {"profile", "photo"}, {"story", "frame"},
    // commerce
    {"store", "product"}, {"store", "order"}, {"store", "customer"}, {"shop", "product"},
    {"shop", "order"}, {"marketplace", "seller"}, {"seller", "product"}, {"product", "variant"},
    {"product", "review"}, {"product", "price"}, {"product", "image"}, {"inventory", "item"},
    {"warehouse", "shelf"}, {"warehouse", "inventory"}, {"shelf", "bin"}, {"order", "item"},
    {"order", "shipment"}, {"order", "payment"}, {"order", "refund"}, {"order", "line"},
    {"cart", "item"}, {"customer", "order"}, {"customer", "address"}, {"customer", "card"},
    {"customer", "subscription"}, {"subscription", "invoice"}, {"invoice", "line"},
    {"invoice", "payment"}, {"shipment", "package"}, {"shipment", "tracking"},
    {"package", "parcel"}, {"wallet", "card"}, {"wallet", "transaction"},
    {"bank", "account"}, {"portfolio", "asset"}, {"portfolio", "position"},
    {"ledger", "entry"}, {"ledger", "transaction"}, {"budget", "expense"},
    // health and people
    {"hospital", "ward"}, {"hospital", "doctor"}, {"hospital", "patient"}, {"ward", "bed"},
    {"ward", "patient"}, {"clinic", "doctor"}, {"clinic", "appointment"},
    {"patient", "record"}, {"patient", "prescription"}, {"patient", "appointment"},
    {"patient", "observation"}, {"record", "entry"}, {"family", "member"},
    {"household", "member"}, {"person", "contact"}, {"contact", "phone"}, {"contact", "email"},
    // infrastructure and cloud
    {"cloud", "region"}, {"region", "datacenter"}, {"datacenter", "rack"}, {"rack", "server"},
    {"cluster", "node"}, {"cluster", "namespace"}, {"namespace", "pod"}, {"namespace", "service"},
    {"pod", "container"}, {"server", "disk"}, {"server", "process"}, {"service", "endpoint"},
    {"service", "instance"}, {"deployment", "instance"}, {"environment", "deployment"},
    {"pipeline", "stage"}, {"pipeline", "job"}, {"stage", "job"}, {"job", "step"},
    {"job", "run"}, {"run", "log"}, {"workflow", "step"}, {"workflow", "run"},
    {"database", "table"}, {"database", "collection"}, {"table", "row"}, {"table", "column"},
    {"row", "cell"}, {"schema", "table"}, {"dataset", "record"}, {"dataset", "table"},
    {"index", "document"}, {"queue", "message"}, {"topic", "subscription"},
    {"stream", "record"}, {"model", "version"}, {"experiment", "run"}, {"survey", "question"},
    {"question", "answer"}, {"quiz", "question"}, {"form", "field"}, {"report", "chart"},
    {"dashboard", "widget"}, {"dashboard", "chart"}, {"domain", "record"},
    {"vpc", "subnet"}, {"subnet", "instance"}, {"firewall", "rule"}, {"policy", "rule"},
    {"policy", "statement"}, {"certificate", "key"}, {"vault", "secret"}, {"keyring", "key"},
    // travel
    {"airline", "flight"}, {"airport", "terminal"}, {"terminal", "gate"}, {"flight", "seat"},
    {"flight", "passenger"}, {"booking", "passenger"}, {"hotel", "room"}, {"hotel", "booking"},
    {"train", "carriage"}, {"carriage", "seat"}, {"station", "platform"}, {"line", "station"},
    {"itinerary", "segment"}, {"trip", "booking"},
};

}  // namespace detail

/// Transitively closed "general contains specific" relation. Construction
/// rejects cycles, so contains(a, b) and contains(b, a) never both hold.
class HierarchyTable {
 public:
  static const HierarchyTable& defaults() {
    static const HierarchyTable table = [] {
      std::vector<std::pair<std::string, std::string>> pairs;
      for (const auto& [g, s] : detail::kContainment) pairs.emplace_back(g, s);
      return HierarchyTable(pairs);
    }();
    return table;
  }

  explicit HierarchyTable(const std::vector<std::pair<std::string, std::string>>& pairs) {
    for (const auto& [general, specific] : pairs) {
      if (general == specific) throw ValidationError("hierarchy pair relates '" + general + "' to itself");
      direct_[general].insert(specific);
    }
    for (const auto& [general, children] : direct_) {
      std::set<std::string>& reach = closure_[general];
      std::vector<std::string> stack(children.begin(), children.end());
      while (!stack.empty()) {
        std::string w = std::move(stack.back());
        stack.pop_back();
        if (!reach.insert(w).second) continue;
        if (auto it = direct_.find(w); it != direct_.end()) {
          for (const auto& c : it->second) stack.push_back(c);
        }
      }
      if (reach.count(general)) {
        throw ValidationError("hierarchy table has a cycle through '" + general + "'");
      }
    }
  }

  /// True when `general` (transitively) contains `specific`.
  bool contains(std::string_view general, std::string_view specific) const {
    auto it = closure_.find(std::string(general));
    return it != closure_.end() && it->second.count(std::string(specific)) != 0;
  }

  std::size_t direct_pair_count() const {
    std::size_t n = 0;
    for (const auto& [g, c] : direct_) n += c.size();
    return n;
  }

 private:
  std::map<std::string, std::set<std::string>> direct_;
  std::map<std::string, std::set<std::string>> closure_;
};

}  // namespace restling
