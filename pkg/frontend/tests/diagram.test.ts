import { describe, expect, it } from "vitest";

import { fitFrame, hitSegment, toCanvas, type Viewport } from "../src/diagram.js";
import { loadFixture } from "./helpers.js";

const scene = loadFixture("analyze_r05.json").scene;
const emptyScene = loadFixture("analyze_empty.json").scene;
const vp: Viewport = { width: 680, height: 500, margin: 44 };

describe("fitFrame", () => {
  it("uses one scale for both axes", () => {
    const frame = fitFrame(scene, vp);
    const [x0] = toCanvas(frame, 0, 0);
    const [x1] = toCanvas(frame, 1, 0);
    const [, y0] = toCanvas(frame, 0, 0);
    const [, y1] = toCanvas(frame, 0, 1);
    // one data unit spans the same pixels horizontally and vertically
    expect(x1 - x0).toBeCloseTo(y0 - y1, 12);
    expect(frame.scale).toBeGreaterThan(0);
  });

  it("maps every scene point inside the viewport", () => {
    const frame = fitFrame(scene, vp);
    const points = [
      ...scene.curves.flatMap((c) => c.points),
      ...scene.markers.map((m) => [m.x, m.y] as [number, number]),
      ...(scene.result_segment ?? []),
    ];
    expect(points.length).toBeGreaterThan(1000);
    for (const [x, y] of points) {
      const [px, py] = toCanvas(frame, x, y);
      expect(px).toBeGreaterThanOrEqual(0);
      expect(px).toBeLessThanOrEqual(vp.width);
      expect(py).toBeGreaterThanOrEqual(0);
      expect(py).toBeLessThanOrEqual(vp.height);
    }
  });

  it("keeps the radius axis baseline in view for empty scenes", () => {
    const frame = fitFrame(emptyScene, vp);
    const [, py] = toCanvas(frame, 0, 0);
    expect(py).toBeGreaterThanOrEqual(0);
    expect(py).toBeLessThanOrEqual(vp.height);
  });
});

describe("hitSegment", () => {
  const frame = fitFrame(scene, vp);

  it("reads the interval endpoints off the segment", () => {
    const seg = scene.result_segment!;
    const midX = (seg[0][0] + seg[1][0]) / 2;
    const [px, py] = toCanvas(frame, midX, 0);
    expect(hitSegment(scene, frame, px, py)).toEqual([0.4, 0.9375]);
    // a near miss inside the tolerance still reads off
    expect(hitSegment(scene, frame, px, py + 5)).toEqual([0.4, 0.9375]);
  });

  it("returns the exact service numbers, not recomputed ones", () => {
    const seg = scene.result_segment!;
    const [px, py] = toCanvas(frame, seg[0][0], seg[0][1]);
    const hit = hitSegment(scene, frame, px, py);
    expect(hit?.[0]).toBe(seg[0][0]);
    expect(hit?.[1]).toBe(seg[1][0]);
  });

  it("misses far from the segment", () => {
    const seg = scene.result_segment!;
    const [px, py] = toCanvas(frame, (seg[0][0] + seg[1][0]) / 2, 0);
    expect(hitSegment(scene, frame, px, py - 40)).toBeNull();
  });

  it("never hits in an empty scene", () => {
    const emptyFrame = fitFrame(emptyScene, vp);
    expect(hitSegment(emptyScene, emptyFrame, vp.width / 2, vp.height / 2)).toBeNull();
  });
});
