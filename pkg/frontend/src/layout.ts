// Deterministic vertex layout: a fixed (count, seed, size) triple always
// produces the same positions, so scenes can be compared exactly in tests
// and re-renders never jitter.

export interface Point {
  x: number;
  y: number;
}

// mulberry32: tiny deterministic PRNG, enough to vary the starting angle.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function circularLayout(count: number, seed = 1, size = 420): Point[] {
  const rand = mulberry32(seed);
  const phase = rand() * 2 * Math.PI;
  const center = size / 2;
  const radius = count <= 1 ? 0 : size * 0.38;
  const points: Point[] = [];
  for (let i = 0; i < count; i += 1) {
    const angle = phase + (2 * Math.PI * i) / Math.max(count, 1);
    points.push({
      x: Math.round(100 * (center + radius * Math.cos(angle))) / 100,
      y: Math.round(100 * (center + radius * Math.sin(angle))) / 100,
    });
  }
  return points;
}
