// Hand-written implementation of the fire architecture against the generated
// framework. Prints one line per alarm activation.

#include <cstdio>
#include <optional>

#include "generated/Runtime.hpp"

namespace {

class Smoke : public fire::SmokePresence {
public:
  bool onNewSmokeLevel(int value) override { return value > 50; }
};

class Risk : public fire::FireRisk {
public:
  std::optional<bool> onNewSmokePresence(bool smoke, TemperaturePull temperature) override {
    if (!smoke) return std::nullopt;
    return temperature() > 40;
  }
};

class Controller : public fire::FireController {
public:
  void onNewFireRisk(bool risky, ActivateOnAlarm activate) override {
    if (risky) activate(3);
  }
};

class Siren : public fire::Alarm {
public:
  int activations = 0;
  void activate(int intensity) override {
    ++activations;
    std::printf("alarm %d\n", intensity);
  }
  void stop() override {}
};

class Detector : public fire::SmokeDetectorSmokeLevel {};

class Thermo : public fire::ThermometerTemperature {
public:
  int celsius = 20;
  int read() override { return celsius; }
};

}  // namespace

int main() {
  Smoke smoke;
  Risk risk;
  Controller controller;
  Siren siren;
  Detector detector;
  Thermo thermo;
  fire::Runtime runtime(smoke, risk, controller, siren, detector, thermo);

  detector.publish(10);
  detector.publish(80);
  thermo.celsius = 60;
  detector.publish(80);
  return siren.activations == 1 ? 0 : 1;
}
