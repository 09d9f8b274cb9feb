/**
 * What-if panel: sliders for the four weight-function parameters. Every
 * change calls POST /recommend/whatif against the current candidate; the
 * stored knowledge base is never written.
 */

import { el } from '../dom.js';
import { ApiClient } from '../api.js';
import type { CandidateRecord, Recommendation, WeightConfig } from '../types.js';

export interface WhatIfPanel {
  element: HTMLElement;
  config(): WeightConfig;
}

interface SliderSpec {
  key: keyof WeightConfig;
  label: string;
  min: number;
  max: number;
  step: number;
}

const SLIDERS: SliderSpec[] = [
  { key: 'threshold', label: 'Experience threshold', min: 0, max: 40, step: 1 },
  { key: 'floor', label: 'Floor weight', min: 0.01, max: 1, step: 0.01 },
  { key: 'peak', label: 'Peak experience', min: 0, max: 40, step: 1 },
  { key: 'spread', label: 'Spread', min: 1, max: 40, step: 1 },
];

export function whatIfPanel(
  api: ApiClient,
  candidate: () => CandidateRecord | null,
  base: WeightConfig,
  onPreview: (recommendation: Recommendation, config: WeightConfig) => void,
  onError: (violations: string[]) => void = () => {},
): WhatIfPanel {
  const current: WeightConfig = { ...base };
  const inputs = new Map<keyof WeightConfig, HTMLInputElement>();

  async function refresh(): Promise<void> {
    const record = candidate();
    if (!record) return;
    try {
      const preview = await api.whatIf(record, { ...current });
      onPreview(preview, { ...current });
    } catch (error) {
      if (error instanceof Error && 'violations' in error) {
        onError((error as { violations: string[] }).violations);
      } else {
        throw error;
      }
    }
  }

  const rows = SLIDERS.map((spec) => {
    const input = el('input', {
      type: 'range',
      name: spec.key,
      min: String(spec.min),
      max: String(spec.max),
      step: String(spec.step),
      value: String(base[spec.key]),
      'data-param': spec.key,
    });
    const shown = el('output', {}, [String(base[spec.key])]);
    input.addEventListener('input', () => {
      current[spec.key] = Number(input.value);
      shown.textContent = input.value;
      void refresh();
    });
    inputs.set(spec.key, input);
    return el('label', { class: 'slider-row' }, [spec.label, input, shown]);
  });

  const element = el('section', { class: 'whatif-panel' }, [
    el('h2', {}, ['Weight what-if']),
    el('p', { class: 'hint' }, [
      'Previews only: slide to re-weight the current candidate without touching the knowledge base.',
    ]),
    ...rows,
  ]);

  return { element, config: () => ({ ...current }) };
}
