#include "ionsaddles/record.hpp"

namespace ionsaddles {

SaddleRecord rescale(const SaddleRecord& record, double from_field, double to_field) {
    SaddleRecord out = record;
    out.positions = rescale(record.positions, from_field, to_field);
    out.energy = rescale_energy(record.energy, from_field, to_field);
    out.lambda_r = rescale_lyapunov(record.lambda_r, from_field, to_field);
    return out;
}

}  // namespace ionsaddles
