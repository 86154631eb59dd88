// Wire types mirroring the service's JSON contract. The viewer never
// computes ply, radii, or witness points itself: everything rendered
// comes from these payloads.

export interface VertexJson {
  id: number;
  x: number;
  y: number;
}

export interface GraphJson {
  vertices: VertexJson[];
  edges: [number, number][];
}

export interface WitnessRegionJson {
  x0: number;
  x1: number;
  point: { x: number; y: number };
}

export interface DiskJson {
  id: number;
  x: number;
  y: number;
  r: number;
}

export interface PlyReportJson {
  ply: number;
  regions: WitnessRegionJson[];
  counters: {
    events: number;
    starts: number;
    ends: number;
    intersections: number;
    postponed: number;
    dropped: number;
  };
  elapsed_ms: number;
  low_confidence: boolean;
  degenerate_floor: boolean;
  disks: DiskJson[];
}

export interface SessionPayload {
  session: string;
  graph: GraphJson;
  report: PlyReportJson;
}

export interface RefineMessage {
  iteration?: number;
  ply?: number;
  moved?: [number, number, number][];
  final?: boolean;
  best_ply?: number;
  fallback?: boolean;
  report?: PlyReportJson;
}

export interface EmptyPlyVerdict {
  empty: boolean;
  violations: [number, number][];
}
