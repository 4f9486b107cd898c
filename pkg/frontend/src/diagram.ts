/** Canvas rendering of the midpoint-radius scene.
 *
 * Scenes arrive fully computed from the service; this module only fits
 * them to the viewport and replays them onto a 2d context. One scale
 * serves both axes so unit slopes render at 45 degrees, matching the
 * service's own SVG output.
 */

import type { SceneDict } from "./types.js";

export interface Viewport {
  width: number;
  height: number;
  margin: number;
}

/** Affine map from data coordinates to canvas pixels (y flipped). */
export interface Frame {
  scale: number;
  ox: number;
  oy: number;
}

const CURVE_COLORS: Record<string, string> = {
  "BR_mu curve": "#1f77b4",
  "BR_rho curve": "#d62728",
};
const ROLE_COLORS: Record<string, string> = {
  asymptote: "#999999",
  locus: "#2ca02c",
};

function scenePoints(scene: SceneDict): [number, number][] {
  const pts: [number, number][] = [];
  for (const curve of scene.curves) pts.push(...curve.points);
  for (const marker of scene.markers) pts.push([marker.x, marker.y]);
  if (scene.result_segment !== null) pts.push(...scene.result_segment);
  return pts;
}

export function fitFrame(scene: SceneDict, vp: Viewport): Frame {
  const pts = scenePoints(scene);
  let xLo = Infinity;
  let xHi = -Infinity;
  let yLo = 0; // keep the radius axis baseline in view
  let yHi = -Infinity;
  for (const [x, y] of pts) {
    if (x < xLo) xLo = x;
    if (x > xHi) xHi = x;
    if (y < yLo) yLo = y;
    if (y > yHi) yHi = y;
  }
  if (!Number.isFinite(xLo)) {
    xLo = -1;
    xHi = 1;
    yHi = 1;
  }
  const padX = 0.05 * (xHi - xLo) || 1;
  const padY = 0.05 * (yHi - yLo) || 1;
  xLo -= padX;
  xHi += padX;
  yLo -= padY;
  yHi += padY;
  const scale = Math.min(
    (vp.width - 2 * vp.margin) / (xHi - xLo),
    (vp.height - 2 * vp.margin) / (yHi - yLo),
  );
  return {
    scale,
    ox: vp.width / 2 - scale * ((xLo + xHi) / 2),
    oy: vp.height / 2 + scale * ((yLo + yHi) / 2),
  };
}

export function toCanvas(frame: Frame, x: number, y: number): [number, number] {
  return [frame.ox + frame.scale * x, frame.oy - frame.scale * y];
}

/** Interval endpoints read off the result segment when the cursor is on
 * it, in canvas pixels; null when there is no segment or the cursor is
 * farther than tolPx. The returned numbers are the service's own. */
export function hitSegment(
  scene: SceneDict,
  frame: Frame,
  px: number,
  py: number,
  tolPx = 8,
): [number, number] | null {
  const seg = scene.result_segment;
  if (seg === null) return null;
  const [x0, y0] = toCanvas(frame, seg[0][0], seg[0][1]);
  const [x1, y1] = toCanvas(frame, seg[1][0], seg[1][1]);
  const dx = x1 - x0;
  const dy = y1 - y0;
  const lengthSq = dx * dx + dy * dy;
  let t = lengthSq === 0 ? 0 : ((px - x0) * dx + (py - y0) * dy) / lengthSq;
  t = Math.max(0, Math.min(1, t));
  const gx = x0 + t * dx - px;
  const gy = y0 + t * dy - py;
  if (gx * gx + gy * gy > tolPx * tolPx) return null;
  return [seg[0][0], seg[1][0]];
}

function strokePolyline(
  ctx: CanvasRenderingContext2D,
  frame: Frame,
  points: [number, number][],
): void {
  ctx.beginPath();
  points.forEach(([x, y], i) => {
    const [px, py] = toCanvas(frame, x, y);
    if (i === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  });
  ctx.stroke();
}

export function drawScene(
  ctx: CanvasRenderingContext2D,
  scene: SceneDict,
  vp: Viewport,
): Frame {
  const frame = fitFrame(scene, vp);
  ctx.clearRect(0, 0, vp.width, vp.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, vp.width, vp.height);

  // radius axis baseline
  ctx.strokeStyle = "#cccccc";
  ctx.lineWidth = 1;
  ctx.setLineDash([]);
  const [, axisY] = toCanvas(frame, 0, 0);
  ctx.beginPath();
  ctx.moveTo(vp.margin / 2, axisY);
  ctx.lineTo(vp.width - vp.margin / 2, axisY);
  ctx.stroke();

  for (const curve of scene.curves) {
    ctx.strokeStyle = CURVE_COLORS[curve.label] ?? ROLE_COLORS[curve.role] ?? "#333333";
    ctx.lineWidth = curve.role === "locus" ? 3 : 1.5;
    ctx.setLineDash(curve.role === "asymptote" ? [6, 4] : []);
    strokePolyline(ctx, frame, curve.points);
  }
  ctx.setLineDash([]);

  if (scene.result_segment !== null) {
    ctx.strokeStyle = "#1f4e9c";
    ctx.lineWidth = 4;
    strokePolyline(ctx, frame, scene.result_segment);
  }

  ctx.font = "11px sans-serif";
  ctx.textBaseline = "bottom";
  for (const marker of scene.markers) {
    const [px, py] = toCanvas(frame, marker.x, marker.y);
    const result = marker.label === "feasible region";
    ctx.fillStyle = result ? "#1f4e9c" : "#111111";
    ctx.beginPath();
    ctx.arc(px, py, result ? 5 : 3.5, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(marker.label, px + 7, py - 4);
  }
  return frame;
}
