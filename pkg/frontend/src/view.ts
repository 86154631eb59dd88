// Viewport transform between model coordinates (the drawing) and screen
// pixels. Pure and invertible: transforms never touch the model values
// sent to the server.

export interface Viewport {
  scale: number;
  tx: number;
  ty: number;
}

export function identityViewport(): Viewport {
  return { scale: 1, tx: 0, ty: 0 };
}

export function modelToScreen(v: Viewport, x: number, y: number): [number, number] {
  return [x * v.scale + v.tx, y * v.scale + v.ty];
}

export function screenToModel(v: Viewport, sx: number, sy: number): [number, number] {
  return [(sx - v.tx) / v.scale, (sy - v.ty) / v.scale];
}

/** Zoom by a factor keeping the screen point (px, py) fixed. */
export function zoomAround(v: Viewport, factor: number, px: number, py: number): Viewport {
  const scale = Math.min(Math.max(v.scale * factor, 1e-6), 1e6);
  const [mx, my] = screenToModel(v, px, py);
  return { scale, tx: px - mx * scale, ty: py - my * scale };
}

export function pan(v: Viewport, dx: number, dy: number): Viewport {
  return { scale: v.scale, tx: v.tx + dx, ty: v.ty + dy };
}

/** Fit a model bounding box into a w x h screen with a margin. */
export function fitViewport(
  w: number,
  h: number,
  x0: number,
  y0: number,
  x1: number,
  y1: number,
  margin = 40,
): Viewport {
  const spanX = Math.max(x1 - x0, 1e-9);
  const spanY = Math.max(y1 - y0, 1e-9);
  const scale = Math.min((w - 2 * margin) / spanX, (h - 2 * margin) / spanY);
  const cx = (x0 + x1) / 2;
  const cy = (y0 + y1) / 2;
  return { scale, tx: w / 2 - cx * scale, ty: h / 2 - cy * scale };
}
