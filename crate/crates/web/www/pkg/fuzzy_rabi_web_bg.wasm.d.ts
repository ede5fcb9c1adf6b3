/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_densities_free: (a: number, b: number) => void;
export const __wbg_get_metrics_deviation: (a: number) => number;
export const __wbg_get_metrics_deviationSe: (a: number) => number;
export const __wbg_get_metrics_effectiveSampleSize: (a: number) => number;
export const __wbg_get_metrics_reliability: (a: number) => number;
export const __wbg_get_metrics_reliabilitySe: (a: number) => number;
export const __wbg_get_metrics_softness: (a: number) => number;
export const __wbg_get_metrics_softnessSe: (a: number) => number;
export const __wbg_metrics_free: (a: number, b: number) => void;
export const __wbg_set_metrics_deviation: (a: number, b: number) => void;
export const __wbg_set_metrics_deviationSe: (a: number, b: number) => void;
export const __wbg_set_metrics_effectiveSampleSize: (a: number, b: number) => void;
export const __wbg_set_metrics_reliability: (a: number, b: number) => void;
export const __wbg_set_metrics_reliabilitySe: (a: number, b: number) => void;
export const __wbg_set_metrics_softness: (a: number, b: number) => void;
export const __wbg_set_metrics_softnessSe: (a: number, b: number) => void;
export const __wbg_trajectory_free: (a: number, b: number) => void;
export const densities: (a: number, b: number, c: number, d: bigint, e: number, f: number) => [number, number, number];
export const densities_bins: (a: number) => number;
export const densities_energyMax: (a: number) => number;
export const densities_energyMin: (a: number) => number;
export const densities_excitation: (a: number) => [number, number];
export const densities_metrics: (a: number) => number;
export const densities_readout: (a: number) => [number, number];
export const ensemble: (a: number, b: number, c: number, d: bigint, e: number) => [number, number, number];
export const trajectory: (a: number, b: number, c: number, d: bigint, e: bigint) => [number, number, number];
export const trajectory_excitation: (a: number) => [number, number];
export const trajectory_finalExcitation: (a: number) => number;
export const trajectory_readout: (a: number) => [number, number];
export const trajectory_smoothed: (a: number) => [number, number];
export const trajectory_times: (a: number) => [number, number];
export const trajectory_weight: (a: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
